use std::fmt;

use super::partition::{Cell, Partition, ShapeError};

/// A shape-indexed assignment of values to the cells of D(λ), stored
/// row-major. The domain is always exactly D(λ).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau<V> {
    shape: Partition,
    rows: Vec<Vec<V>>,
}

impl<V> Tableau<V> {
    pub fn new(shape: Partition, rows: Vec<Vec<V>>) -> Result<Self, ShapeError> {
        let got: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        if got != shape.parts() {
            return Err(ShapeError::TableauMismatch {
                shape: shape.parts().to_vec(),
                got,
            });
        }
        Ok(Tableau { shape, rows })
    }

    /// Builds a tableau by evaluating `f` on every cell, row-major.
    pub fn from_fn(shape: Partition, mut f: impl FnMut(Cell) -> V) -> Self {
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| (1..=len).map(|j| f(Cell::new(i + 1, j))).collect())
            .collect();
        Tableau { shape, rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn get(&self, cell: Cell) -> &V {
        &self.rows[cell.row - 1][cell.col - 1]
    }

    pub fn rows(&self) -> &[Vec<V>] {
        &self.rows
    }

    /// Row-major (cell, value) pairs.
    pub fn iter(&self) -> impl Iterator<Item = (Cell, &V)> {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, v)| (Cell::new(i + 1, j + 1), v))
        })
    }

    pub fn map<W>(&self, mut f: impl FnMut(&V) -> W) -> Tableau<W> {
        Tableau {
            shape: self.shape.clone(),
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(&mut f).collect())
                .collect(),
        }
    }

    /// Updates a single cell, returning the modified tableau.
    pub fn with(&self, cell: Cell, value: V) -> Tableau<V>
    where
        V: Clone,
    {
        let mut rows = self.rows.clone();
        rows[cell.row - 1][cell.col - 1] = value;
        Tableau {
            shape: self.shape.clone(),
            rows,
        }
    }
}

impl<V: Clone> Tableau<V> {
    /// The transposed tableau on the conjugate shape: s′_{ij} = s_{ji}.
    pub fn transpose(&self) -> Tableau<V> {
        let conj = self.shape.conjugate();
        Tableau::from_fn(conj, |c| self.rows[c.col - 1][c.row - 1].clone())
    }
}

impl<V: fmt::Display> Tableau<V> {
    /// Row-major bracket text form, e.g. "[[2,1],[3]]".
    pub fn to_bracket_string(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

/// Parses the row-major bracket list "[[a,b],[c]]" into rows of raw strings.
pub fn parse_bracket_rows(s: &str) -> Result<Vec<Vec<String>>, ShapeError> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| ShapeError::Parse(s.to_string()))?;
    let mut rows = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in inner.chars() {
        match ch {
            '[' => {
                depth += 1;
                if depth > 1 {
                    return Err(ShapeError::Parse(s.to_string()));
                }
                cur.clear();
            }
            ']' => {
                if depth != 1 {
                    return Err(ShapeError::Parse(s.to_string()));
                }
                depth -= 1;
                let row: Vec<String> = cur
                    .split(',')
                    .map(|x| x.trim().to_string())
                    .filter(|x| !x.is_empty())
                    .collect();
                if row.is_empty() {
                    return Err(ShapeError::Parse(s.to_string()));
                }
                rows.push(row);
            }
            ',' if depth == 0 => {}
            _ if depth == 1 => cur.push(ch),
            c if c.is_whitespace() => {}
            _ => return Err(ShapeError::Parse(s.to_string())),
        }
    }
    if rows.is_empty() {
        return Err(ShapeError::Parse(s.to_string()));
    }
    Ok(rows)
}

/// Parses "[[2,1],[3]]" against a shape, with entries parsed by `FromStr`.
pub fn parse_tableau<V: std::str::FromStr>(
    shape: &Partition,
    s: &str,
) -> Result<Tableau<V>, ShapeError> {
    let raw = parse_bracket_rows(s)?;
    let rows: Result<Vec<Vec<V>>, _> = raw
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| x.parse::<V>().map_err(|_| ShapeError::Parse(s.to_string())))
                .collect()
        })
        .collect();
    Tableau::new(shape.clone(), rows?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn new_checks_shape() {
        assert!(Tableau::new(p(&[2, 1]), vec![vec![1, 2], vec![3]]).is_ok());
        assert!(Tableau::new(p(&[2, 1]), vec![vec![1], vec![3]]).is_err());
        assert!(Tableau::new(p(&[2, 1]), vec![vec![1, 2]]).is_err());
    }

    #[test]
    fn transpose_is_conjugate_shape() {
        let t = Tableau::new(p(&[2, 1]), vec![vec![1, 2], vec![3]]).unwrap();
        let tt = t.transpose();
        assert_eq!(tt.shape(), &p(&[2, 1]));
        assert_eq!(tt.rows(), &[vec![1, 3], vec![2]]);
        let row = Tableau::new(p(&[3]), vec![vec![7, 8, 9]]).unwrap();
        assert_eq!(row.transpose().rows(), &[vec![7], vec![8], vec![9]]);
    }

    #[test]
    fn bracket_parse_and_print() {
        let t: Tableau<i64> = parse_tableau(&p(&[2, 1]), "[[2,1],[3]]").unwrap();
        assert_eq!(t.rows(), &[vec![2, 1], vec![3]]);
        assert_eq!(t.to_bracket_string(), "[[2,1],[3]]");
        assert!(parse_tableau::<i64>(&p(&[2, 1]), "[[2,1]]").is_err());
        assert!(parse_tableau::<i64>(&p(&[2, 1]), "[[2,x],[3]]").is_err());
        // symbolic entries parse as strings
        let s: Tableau<String> = parse_tableau(&p(&[2]), "[[a,b]]").unwrap();
        assert_eq!(s.rows(), &[vec!["a".to_string(), "b".to_string()]]);
    }
}
