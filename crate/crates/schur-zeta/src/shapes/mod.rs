//! Partitions, Young diagrams, tableau containers, semi-standard Young
//! tableau enumeration, and the combinatorial decomposition of Schur
//! multiple zeta functions into MZV / zeta-star terms.

mod levels;
mod partition;
mod ssyt;
mod tableau;

pub use levels::{
    decompose_to_mzv, decompose_to_mzv_star, enumerate_level_maps, Composition, LevelMap,
    Summable,
};
pub use partition::{Cell, Partition, ShapeError};
pub use ssyt::{enumerate_ssyt, for_each_ssyt, Ssyt};
pub use tableau::{parse_bracket_rows, parse_tableau, Tableau};
