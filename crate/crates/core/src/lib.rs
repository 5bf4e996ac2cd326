//! Constructions, exact counting kernels and small exhaustive searches for
//! extremal graph theory and Ramsey-type problems.

pub mod ap;
pub mod bitset;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod kst;
pub mod matching;
pub mod multiplicity;
pub mod ramsey;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
