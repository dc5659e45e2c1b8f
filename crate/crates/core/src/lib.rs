//! Exact θ-operator algebra for generalized hypergeometric operators and a
//! rigidity toolkit for tuples of matrices sharing `n − 1` rows or columns.

pub mod error;
pub mod exact;
pub mod extension;
pub mod hypergeometric;
pub mod monodromy;
pub mod rigidity;
pub mod sample;
pub mod sweep;
pub mod theta;

pub use error::{Error, Result};
