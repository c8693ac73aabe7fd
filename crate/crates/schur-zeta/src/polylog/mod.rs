//! The Schur type polylogarithm: exact truncated series over the SSYT sum,
//! and numeric evaluation on the open unit polydisc, together with the
//! classical and multiple polylogarithm machinery the analytic layer needs.

pub mod classical;
mod eval;
pub mod hook;
pub mod mpl;
mod series;

pub use eval::schur_polylog_eval;
pub use mpl::{multiple_polylog_eval, polylog_at_one_minus_exp};
pub use series::{schur_polylog_series, WeightTableau};
