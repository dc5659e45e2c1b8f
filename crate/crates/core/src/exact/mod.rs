//! Exact scalar, polynomial, and dense linear algebra kernel.

pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod scalar;
pub mod subspace;

pub use matrix::ExactMatrix;
pub use poly::Poly;
pub use ratfunc::RationalFunction;
pub use scalar::{q, GaussianRational};
pub use subspace::Subspace;

use crate::error::Result;

pub fn rank(m: &ExactMatrix) -> usize {
    m.rank()
}

pub fn kernel(m: &ExactMatrix) -> Subspace {
    m.kernel()
}

pub fn char_poly(m: &ExactMatrix) -> Result<Poly> {
    m.char_poly()
}

pub fn poly_gcd(p: &Poly, q: &Poly) -> Result<Poly> {
    p.gcd(q)
}
