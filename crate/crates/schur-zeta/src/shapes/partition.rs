use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapeError {
    #[error("partition parts must be positive and non-increasing, got {0:?}")]
    InvalidParts(Vec<usize>),
    #[error("partition must be non-empty")]
    Empty,
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
    #[error("tableau rows {got:?} do not match shape {shape:?}")]
    TableauMismatch { shape: Vec<usize>, got: Vec<usize> },
}

/// A cell (i, j) of a Young diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// A partition λ = (λ₁ ≥ λ₂ ≥ … ≥ λ_r ≥ 1), identified with its Young
/// diagram D(λ) of left-aligned rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, ShapeError> {
        if parts.is_empty() {
            return Err(ShapeError::Empty);
        }
        if parts.iter().any(|&p| p == 0) || !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(ShapeError::InvalidParts(parts));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// |λ|, the number of cells.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// l(λ), the number of rows.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Row-major list of all cells of D(λ).
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.weight());
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 1..=len {
                out.push(Cell::new(i + 1, j));
            }
        }
        out
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col >= 1
            && cell.row <= self.parts.len()
            && cell.col <= self.parts[cell.row - 1]
    }

    /// The corners of λ: cells (i, j) with neither (i+1, j) nor (i, j+1) in
    /// the diagram, in row order.
    pub fn corners(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (i, &len) in self.parts.iter().enumerate() {
            let below = self.parts.get(i + 1).copied().unwrap_or(0);
            if below < len {
                out.push(Cell::new(i + 1, len));
            }
        }
        out
    }

    /// The conjugate partition λ′ (transposed diagram).
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Hook length of a cell.
    pub fn hook_length(&self, cell: Cell) -> usize {
        assert!(self.contains(cell));
        let arm = self.parts[cell.row - 1] - cell.col;
        let leg = self
            .parts
            .iter()
            .skip(cell.row)
            .filter(|&&p| p >= cell.col)
            .count();
        arm + leg + 1
    }

    /// True for hooks (h, 1^{ℓ-1}). Single rows and columns count.
    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    /// True when the diagram has a single corner, i.e. all parts equal.
    pub fn is_rectangle(&self) -> bool {
        self.parts.iter().all(|&p| p == self.parts[0])
    }
}

impl FromStr for Partition {
    type Err = ShapeError;

    /// Parses the comma-list text form, e.g. "4,4,3,1".
    fn from_str(s: &str) -> Result<Self, ShapeError> {
        let parts: Result<Vec<usize>, _> = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect();
        match parts {
            Ok(v) => Partition::new(v).map_err(|_| ShapeError::Parse(s.to_string())),
            Err(_) => Err(ShapeError::Parse(s.to_string())),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn corners_match_worked_example() {
        // C((4,4,3,1)) = { (2,4), (3,3), (4,1) }
        assert_eq!(
            p(&[4, 4, 3, 1]).corners(),
            vec![Cell::new(2, 4), Cell::new(3, 3), Cell::new(4, 1)]
        );
        assert_eq!(p(&[1]).corners(), vec![Cell::new(1, 1)]);
        assert_eq!(p(&[3, 1]).corners(), vec![Cell::new(1, 3), Cell::new(2, 1)]);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(p(&[1]).conjugate(), p(&[1]));
        // involution
        for parts in [&[4usize, 4, 3, 1][..], &[5, 2], &[2, 1, 1, 1]] {
            assert_eq!(p(parts).conjugate().conjugate(), p(parts));
        }
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let q: Partition = "4,4,3,1".parse().unwrap();
        assert_eq!(q, p(&[4, 4, 3, 1]));
        assert_eq!(q.to_string(), "4,4,3,1");
        assert!("4,x".parse::<Partition>().is_err());
    }

    #[test]
    fn hook_lengths_and_classification() {
        let h = p(&[2, 1]);
        assert!(h.is_hook());
        assert!(!h.is_rectangle());
        assert_eq!(h.hook_length(Cell::new(1, 1)), 3);
        assert_eq!(h.hook_length(Cell::new(1, 2)), 1);
        assert_eq!(h.hook_length(Cell::new(2, 1)), 1);
        assert!(p(&[2, 2]).is_rectangle());
        assert!(!p(&[3, 2]).is_hook());
    }
}
