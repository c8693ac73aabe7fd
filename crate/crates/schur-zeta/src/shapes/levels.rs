use super::partition::{Cell, Partition};
use super::tableau::Tableau;

/// A level map of shape λ: an assignment of levels 1..p to the cells,
/// weakly increasing along rows, strictly increasing down columns, and
/// surjective onto 1..p. Level maps index the terms of the expansion of a
/// Schur multiple zeta function into Euler–Zagier ones: cells merged into
/// one level contribute a single summation variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelMap {
    levels: Tableau<usize>,
    depth: usize,
}

impl LevelMap {
    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn levels(&self) -> &Tableau<usize> {
        &self.levels
    }

    /// Cells grouped by level, index 0 holding level 1.
    pub fn level_sets(&self) -> Vec<Vec<Cell>> {
        let mut sets = vec![Vec::new(); self.depth];
        for (cell, &lv) in self.levels.iter() {
            sets[lv - 1].push(cell);
        }
        sets
    }
}

/// All level maps of the shape, every depth, in lexicographic row-major
/// order of the level tableau.
pub fn enumerate_level_maps(shape: &Partition) -> Vec<LevelMap> {
    let cells = shape.cells();
    let n = cells.len();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();

    fn rec(
        cells: &[Cell],
        idx: usize,
        n: usize,
        rows: &mut Vec<Vec<usize>>,
        shape: &Partition,
        out: &mut Vec<LevelMap>,
    ) {
        if idx == cells.len() {
            let depth = rows.iter().flatten().copied().max().unwrap();
            let mut seen = vec![false; depth];
            for &v in rows.iter().flatten() {
                seen[v - 1] = true;
            }
            if seen.iter().all(|&s| s) {
                out.push(LevelMap {
                    levels: Tableau::new(shape.clone(), rows.clone()).unwrap(),
                    depth,
                });
            }
            return;
        }
        let c = cells[idx];
        let (i, j) = (c.row - 1, c.col - 1);
        let mut lo = 1usize;
        if j > 0 {
            lo = lo.max(rows[i][j - 1]);
        }
        if i > 0 {
            lo = lo.max(rows[i - 1][j] + 1);
        }
        for v in lo..=n {
            rows[i][j] = v;
            rec(cells, idx + 1, n, rows, shape, out);
        }
        rows[i][j] = 0;
    }
    rec(&cells, 0, n, &mut rows, shape, &mut out);
    out
}

/// Values that can be summed when cells merge into one level.
pub trait Summable: Clone {
    fn merge(parts: &[Self]) -> Self;
}

impl Summable for i64 {
    fn merge(parts: &[Self]) -> Self {
        parts.iter().sum()
    }
}

impl Summable for f64 {
    fn merge(parts: &[Self]) -> Self {
        parts.iter().sum()
    }
}

impl Summable for String {
    fn merge(parts: &[Self]) -> Self {
        parts.join("+")
    }
}

impl Summable for crate::arith::Rat {
    fn merge(parts: &[Self]) -> Self {
        parts.iter().cloned().sum()
    }
}

/// An MZV index: a sequence of exponent values with an attached sign.
#[derive(Debug, Clone, PartialEq)]
pub struct Composition<V> {
    pub parts: Vec<V>,
    pub sign: i8,
}

impl<V> Composition<V> {
    pub fn depth(&self) -> usize {
        self.parts.len()
    }
}

fn composition_of<V: Summable>(map: &LevelMap, s: &Tableau<V>) -> Vec<V> {
    map.level_sets()
        .iter()
        .map(|cells| {
            let vals: Vec<V> = cells.iter().map(|&c| s.get(c).clone()).collect();
            V::merge(&vals)
        })
        .collect()
}

/// Expands ζ_λ(s) into a list of plain MZV indices, one per level map,
/// multiplicity preserved. Part p of each composition is the sum of s over
/// the cells at level p.
pub fn decompose_to_mzv<V: Summable>(shape: &Partition, s: &Tableau<V>) -> Vec<Composition<V>> {
    assert_eq!(s.shape(), shape, "tableau shape mismatch");
    enumerate_level_maps(shape)
        .iter()
        .map(|m| Composition {
            parts: composition_of(m, s),
            sign: 1,
        })
        .collect()
}

/// Expands ζ_λ(s) into signed zeta-star indices: level maps of the
/// conjugate shape applied to the transposed tableau, each term carrying
/// sign (−1)^{|λ| − depth}.
pub fn decompose_to_mzv_star<V: Summable>(
    shape: &Partition,
    s: &Tableau<V>,
) -> Vec<Composition<V>> {
    assert_eq!(s.shape(), shape, "tableau shape mismatch");
    let st = s.transpose();
    let conj = shape.conjugate();
    let n = shape.weight();
    enumerate_level_maps(&conj)
        .iter()
        .map(|m| Composition {
            parts: composition_of(m, &st),
            sign: if (n - m.depth()) % 2 == 0 { 1 } else { -1 },
        })
        .collect()
}
