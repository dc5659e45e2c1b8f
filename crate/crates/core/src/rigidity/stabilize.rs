//! Common invariant lines and hyperplanes for tuples with a shared frame and
//! a common eigenvalue, and polynomial certificates of a common eigenvalue
//! for tuples with a shared frame and a common invariant subspace.

use serde::Serialize;

use super::frame::{unit, CommonFrame, Side};
use super::MatrixTuple;
use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, GaussianRational, Poly, Subspace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StabilizedSubspace {
    Line(Subspace),
    Hyperplane(Subspace),
}

impl StabilizedSubspace {
    pub fn subspace(&self) -> &Subspace {
        match self {
            Self::Line(s) | Self::Hyperplane(s) => s,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Line(_) => "line",
            Self::Hyperplane(_) => "hyperplane",
        }
    }
}

fn check_frame(t: &MatrixTuple, frame: &CommonFrame) -> Result<MatrixTuple> {
    if !frame.verify(t)? {
        return Err(Error::NoCommonFrame("tuple does not share the given frame".into()));
    }
    frame.apply(t)
}

fn shifted(m: &ExactMatrix, lambda: &GaussianRational) -> ExactMatrix {
    m - &ExactMatrix::identity(m.rows()).scale(lambda)
}

/// Places `c` at the shared positions and 0 at the free one.
fn spread(frame: &CommonFrame, c: &[GaussianRational]) -> Vec<GaussianRational> {
    let mut v = vec![GaussianRational::zero(); frame.n()];
    for (&k, x) in frame.shared_indices.iter().zip(c) {
        v[k] = x.clone();
    }
    v
}

/// A common invariant line or hyperplane for the eigenvalue `λ`.
///
/// With shared rows, the shared rows of `A′_i − λI` either are independent,
/// and the vector orthogonal to them is a common eigenvector, or satisfy a
/// relation `c`, and `(c, 0)` is a common left eigenvector whose kernel is an
/// invariant hyperplane. Shared columns are the transposed situation.
pub fn find_stabilized_subspace(
    t: &MatrixTuple,
    frame: &CommonFrame,
    lambda: &GaussianRational,
) -> Result<StabilizedSubspace> {
    for (k, p) in t.char_polys().iter().enumerate() {
        if !p.eval(lambda).is_zero() {
            return Err(Error::NotCommonEigenvalue(format!("{lambda} is not an eigenvalue of matrix {k}")));
        }
    }
    let moved = check_frame(t, frame)?;
    let n = t.n();
    let first = shifted(&moved.matrices()[0], lambda);
    let shared = match frame.side {
        Side::Rows => ExactMatrix::from_rows(frame.shared_indices.iter().map(|&k| first.row(k)).collect())?,
        Side::Columns => {
            ExactMatrix::from_rows(frame.shared_indices.iter().map(|&k| first.column(k)).collect())?
        }
    };
    // `shared` holds the shared rows, or the transposed shared columns
    let independent = shared.rank() == n - 1;
    let p = &frame.basis_change;
    // line P⁻¹v, or hyperplane {y : wᵀPy = 0}
    let line = |v: Vec<GaussianRational>| -> Result<StabilizedSubspace> {
        Ok(StabilizedSubspace::Line(Subspace::span(n, &[p.inverse()?.mul_vec(&v)?])?))
    };
    let hyperplane = |w: Vec<GaussianRational>| -> Result<StabilizedSubspace> {
        let row = ExactMatrix::from_rows(vec![w])?.try_mul(p)?;
        Ok(StabilizedSubspace::Hyperplane(row.kernel()))
    };
    let out = match (frame.side, independent) {
        (Side::Rows, true) => line(shared.kernel_vectors().remove(0))?,
        (Side::Columns, true) => hyperplane(shared.kernel_vectors().remove(0))?,
        (Side::Rows, false) => hyperplane(spread(frame, &shared.transpose().kernel_vectors()[0]))?,
        (Side::Columns, false) => line(spread(frame, &shared.transpose().kernel_vectors()[0]))?,
    };
    for (index, m) in t.matrices().iter().enumerate() {
        if !out.subspace().is_invariant_under(m)? {
            return Err(Error::NotInvariant { index });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateBranch {
    /// The subspace lies in the span of the shared basis vectors; the
    /// members agree on it.
    Restriction,
    /// It does not; the members induce the same map on the quotient.
    Quotient,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumCertificate {
    pub branch: CertificateBranch,
    /// Characteristic polynomial of the common block.
    pub factor: Poly,
    /// Monic gcd of all characteristic polynomials.
    pub gcd: Poly,
}

/// For matrices sharing the first `n − 1` columns of frame coordinates and
/// an invariant `w`, the characteristic polynomial of a block that all
/// members have in common.
fn common_block_factor(ms: &[ExactMatrix], e: &Subspace, w: &Subspace) -> Result<(CertificateBranch, Poly)> {
    let n = e.ambient();
    let r = w.dim();
    if w.is_subspace_of(e)? {
        // basis {w₁..w_r, …}: upper-left r×r block is A|_W
        let c = w.completed_basis();
        let block = ms[0].conjugate_by(&c.inverse()?)?.submatrix(0, 0, r, r);
        Ok((CertificateBranch::Restriction, block.char_poly()?))
    } else {
        // basis {g₁..g_{n−r} ⊂ E, w₁..w_r}: upper-left block is the quotient map
        let mut basis: Vec<Vec<GaussianRational>> = Vec::new();
        let mut span = w.clone();
        for g in e.basis() {
            if span.dim() == n {
                break;
            }
            if !span.contains(g)? {
                span = span.sum(&Subspace::span(n, std::slice::from_ref(g))?)?;
                basis.push(g.clone());
            }
        }
        basis.extend(w.basis().iter().cloned());
        let c = ExactMatrix::from_columns(n, &basis)?;
        let block = ms[0].conjugate_by(&c.inverse()?)?.submatrix(0, 0, n - r, n - r);
        Ok((CertificateBranch::Quotient, block.char_poly()?))
    }
}

/// A nonconstant polynomial dividing every characteristic polynomial,
/// derived from a common invariant subspace `w`.
pub fn common_spectrum_certificate(
    t: &MatrixTuple,
    frame: &CommonFrame,
    w: &Subspace,
) -> Result<SpectrumCertificate> {
    let n = t.n();
    if w.ambient() != n {
        return Err(Error::DimensionMismatch(format!("subspace in dimension {}, tuple in {n}", w.ambient())));
    }
    if w.dim() == 0 || w.dim() == n {
        return Err(Error::TrivialSubspace);
    }
    for (index, m) in t.matrices().iter().enumerate() {
        if !w.is_invariant_under(m)? {
            return Err(Error::NotInvariant { index });
        }
    }
    let moved = check_frame(t, frame)?;
    let w_frame = w.image_under(&frame.basis_change)?;
    let e = frame.shared_span();
    let (branch, factor) = match frame.side {
        Side::Columns => common_block_factor(moved.matrices(), &e, &w_frame)?,
        Side::Rows => {
            // transposes share columns and leave the annihilator invariant
            let ts: Vec<_> = moved.matrices().iter().map(ExactMatrix::transpose).collect();
            common_block_factor(&ts, &e, &w_frame.annihilator())?
        }
    };
    let polys = t.char_polys();
    for p in &polys {
        if !p.is_divisible_by(&factor)? {
            return Err(Error::SpectrumIntersection(format!("certificate {factor} does not divide {p}")));
        }
    }
    let gcd = Poly::gcd_all(&polys)?;
    if gcd.is_constant() {
        return Err(Error::ConstantGcd);
    }
    Ok(SpectrumCertificate { branch, factor, gcd })
}

/// `span(e_k)` for `k` in `range`, as a helper for building fixtures.
pub fn coordinate_subspace(n: usize, range: std::ops::Range<usize>) -> Subspace {
    let vs: Vec<_> = range.map(|k| unit(n, k)).collect();
    Subspace::span(n, &vs).expect("lengths")
}
