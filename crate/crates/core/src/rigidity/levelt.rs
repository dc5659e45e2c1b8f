//! Simultaneous companion normal form for tuples sharing `n − 1` columns
//! with no eigenvalue common to all members.

use serde::Serialize;

use super::frame::{common_frame, unit, CommonFrame, Side};
use super::{companion_matrix, MatrixTuple};
use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeveltForm {
    /// `U` with `U·A_i·U⁻¹` the companion of `char_poly(A_i)`.
    pub u: ExactMatrix,
    pub canon: MatrixTuple,
}

/// Builds the cyclic basis `{v, A₁v, …, A₁^{n−1}v}` where `v` spans
/// `A₁^{−(n−2)}(W ∩ A₁W ∩ … ∩ A₁^{n−2}W)` and `W` is the span of the
/// shared columns. All members agree on `W`, so each becomes a companion
/// matrix in this basis.
pub fn levelt_normal_form(t: &MatrixTuple, frame: &CommonFrame) -> Result<LeveltForm> {
    if frame.side == Side::Rows {
        return Err(Error::RowFrame);
    }
    t.require_invertible()?;
    if !frame.verify(t)? {
        return Err(Error::NoCommonFrame("tuple does not share the given frame".into()));
    }
    let gcd = t.spectrum_gcd();
    if !gcd.is_constant() {
        return Err(Error::SpectrumIntersection(format!("characteristic polynomials share {gcd}")));
    }
    let n = t.n();
    let a1 = &t.matrices()[0];
    let back = frame.basis_change.inverse()?;
    let w_vectors: Vec<_> =
        frame.shared_indices.iter().map(|&k| back.mul_vec(&unit(n, k))).collect::<Result<_>>()?;
    let w = Subspace::span(n, &w_vectors)?;

    let mut chain = w.clone();
    let mut power = w.clone();
    for _ in 1..=n - 2 {
        power = power.image_under(a1)?;
        chain = chain.intersect(&power)?;
    }
    if chain.dim() != 1 {
        return Err(Error::SpectrumIntersection(format!("W ∩ A₁W ∩ … has dimension {}", chain.dim())));
    }
    let a1_inv = a1.inverse()?;
    let mut v = chain.basis()[0].clone();
    for _ in 0..n - 2 {
        v = a1_inv.mul_vec(&v)?;
    }
    let mut cols = vec![v];
    for k in 1..n {
        let next = a1.mul_vec(&cols[k - 1])?;
        cols.push(next);
    }
    let b = ExactMatrix::from_columns(n, &cols)?;
    if !b.is_invertible() {
        return Err(Error::SpectrumIntersection("cyclic basis is degenerate".into()));
    }
    let u = b.inverse()?;
    let canon = t.conjugate_by(&u)?;
    for (index, (m, p)) in canon.matrices().iter().zip(t.char_polys()).enumerate() {
        if *m != companion_matrix(&p)? {
            return Err(Error::SpectrumIntersection(format!("member {index} is not in companion form")));
        }
    }
    Ok(LeveltForm { u, canon })
}

/// A matrix `u` with `u·a_i·u⁻¹ = b_i` for every `i`, or `None` when some
/// pair of characteristic polynomials differs. Both tuples need a column
/// frame and an empty total spectrum intersection.
pub fn tuple_conjugator(a: &MatrixTuple, b: &MatrixTuple) -> Result<Option<ExactMatrix>> {
    if a.len() != b.len() || a.n() != b.n() {
        return Err(Error::InvalidTuple("tuples have different shapes".into()));
    }
    if a.char_polys() != b.char_polys() {
        return Ok(None);
    }
    let fa = levelt_normal_form(a, &common_frame(a)?)?;
    let fb = levelt_normal_form(b, &common_frame(b)?)?;
    let u = fb.u.inverse()?.try_mul(&fa.u)?;
    if a.conjugate_by(&u)? != *b {
        return Err(Error::SpectrumIntersection("normal forms do not compose".into()));
    }
    Ok(Some(u))
}
