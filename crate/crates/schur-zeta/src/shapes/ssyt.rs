use super::partition::{Cell, Partition};
use super::tableau::Tableau;

/// A semi-standard Young tableau: rows weakly increasing left to right,
/// columns strictly increasing top to bottom, positive integer entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ssyt(Tableau<u32>);

impl Ssyt {
    pub fn tableau(&self) -> &Tableau<u32> {
        &self.0
    }

    pub fn get(&self, cell: Cell) -> u32 {
        *self.0.get(cell)
    }
}

/// Streams every SSYT of `shape` whose entry at corner `corners()[i]` is at
/// most `corner_bounds[i]`, in lexicographic row-major order. Entries at
/// non-corner cells are automatically bounded because every cell is
/// dominated by some corner along a right/down path.
pub fn for_each_ssyt(shape: &Partition, corner_bounds: &[u32], mut f: impl FnMut(&Tableau<u32>)) {
    let corners = shape.corners();
    assert_eq!(
        corners.len(),
        corner_bounds.len(),
        "one bound per corner required"
    );
    // Per-cell upper bound: min over dominating corners of that corner's
    // bound, propagated right-to-left and bottom-up.
    let mut cap = Tableau::from_fn(shape.clone(), |_| u32::MAX);
    for (c, &b) in corners.iter().zip(corner_bounds) {
        cap = cap.with(*c, b);
    }
    let rows = shape.parts().to_vec();
    let mut caps: Vec<Vec<u32>> = cap.rows().to_vec();
    for i in (0..rows.len()).rev() {
        for j in (0..rows[i]).rev() {
            let mut m = caps[i][j];
            if j + 1 < rows[i] {
                m = m.min(caps[i][j + 1]);
            }
            if i + 1 < rows.len() && rows[i + 1] > j {
                m = m.min(caps[i + 1][j].saturating_sub(1));
            }
            caps[i][j] = m;
        }
    }

    let cells = shape.cells();
    let mut vals: Vec<Vec<u32>> = rows.iter().map(|&len| vec![0; len]).collect();

    fn rec(
        cells: &[Cell],
        idx: usize,
        caps: &[Vec<u32>],
        vals: &mut Vec<Vec<u32>>,
        shape: &Partition,
        f: &mut impl FnMut(&Tableau<u32>),
    ) {
        if idx == cells.len() {
            let t = Tableau::new(shape.clone(), vals.clone()).unwrap();
            f(&t);
            return;
        }
        let c = cells[idx];
        let (i, j) = (c.row - 1, c.col - 1);
        let mut lo = 1u32;
        if j > 0 {
            lo = lo.max(vals[i][j - 1]); // weak along the row
        }
        if i > 0 && vals[i - 1].len() > j {
            lo = lo.max(vals[i - 1][j] + 1); // strict down the column
        }
        let hi = caps[i][j];
        for v in lo..=hi {
            vals[i][j] = v;
            rec(cells, idx + 1, caps, vals, shape, f);
        }
    }
    rec(&cells, 0, &caps, &mut vals, shape, &mut f);
}

/// Collects the SSYT stream into a vector of [`Ssyt`].
pub fn enumerate_ssyt(shape: &Partition, corner_bounds: &[u32]) -> Vec<Ssyt> {
    let mut out = Vec::new();
    for_each_ssyt(shape, corner_bounds, |t| out.push(Ssyt(t.clone())));
    out
}
