//! Exact computation of twisted Higgs-bundle invariants from partition sums,
//! and of the rank-by-rank ADHM wall-crossing recursion.

pub mod adhm;
pub mod algebra;
pub mod error;
pub mod higgs;
pub mod partitions;
pub mod plethysm;
pub mod render;

pub use error::{Error, Result};
