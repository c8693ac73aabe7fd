//! Exact and numeric computation for Schur multiple zeta functions and
//! Schur type poly-Bernoulli numbers.
//!
//! The crate computes B/C number tables from their generating series with
//! exact rational arithmetic, verifies the binomial, recurrence, BC and
//! Stirling identities relating them, expands Schur multiple zeta functions
//! into Euler–Zagier MZV / zeta-star terms, and numerically evaluates
//! ζ_λ, the ξ and η integral transforms, and the 1-D integral
//! representations, with error-bound-carrying results throughout.

pub mod arith;
pub mod series;
pub mod shapes;

pub use arith::{binomial, factorial, stirling2, Int, Rat, StirlingCache};
pub use shapes::{
    decompose_to_mzv, decompose_to_mzv_star, enumerate_level_maps, enumerate_ssyt, Cell,
    Composition, LevelMap, Partition, ShapeError, Ssyt, Tableau,
};
