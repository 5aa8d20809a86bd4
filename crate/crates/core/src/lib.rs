//! Domino tableaux, rank-r Robinson-Schensted insertion for signed
//! permutations, and the cycle calculus relating different ranks.

pub mod cycles;
pub mod equivalence;
pub mod error;
pub mod insertion;
pub mod model;
pub mod structure;
pub mod tableau;

pub use error::{Error, Result};
pub use model::{core_shape, enumerate_group, group_order, Shape, SignedPermutation, Square};
pub use tableau::{Bitableau, Domino, DominoTableau, Label, YoungTableau};
