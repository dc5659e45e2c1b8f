//! Tuples of matrices sharing `n − 1` rows or columns: pseudo-reflections,
//! common frames, invariant subspaces, spectrum certificates and the
//! simultaneous companion normal form.

pub mod frame;
pub mod levelt;
pub mod span;
pub mod stabilize;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, GaussianRational, Poly};

pub use frame::{common_frame, CommonFrame, Side};
pub use levelt::{levelt_normal_form, tuple_conjugator, LeveltForm};
pub use span::algebra_span_dimension;
pub use stabilize::{
    common_spectrum_certificate, coordinate_subspace, find_stabilized_subspace, CertificateBranch, SpectrumCertificate,
    StabilizedSubspace,
};

/// `p ≥ 2` square matrices of a common size `n ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTuple", into = "RawTuple")]
pub struct MatrixTuple {
    matrices: Vec<ExactMatrix>,
}

#[derive(Serialize, Deserialize)]
struct RawTuple {
    n: usize,
    matrices: Vec<ExactMatrix>,
}

impl TryFrom<RawTuple> for MatrixTuple {
    type Error = Error;
    fn try_from(raw: RawTuple) -> Result<Self> {
        let t = Self::new(raw.matrices)?;
        if t.n() != raw.n {
            return Err(Error::InvalidTuple(format!("declared n = {} but matrices are {}x{}", raw.n, t.n(), t.n())));
        }
        Ok(t)
    }
}

impl From<MatrixTuple> for RawTuple {
    fn from(t: MatrixTuple) -> Self {
        Self { n: t.n(), matrices: t.matrices }
    }
}

impl MatrixTuple {
    pub fn new(matrices: Vec<ExactMatrix>) -> Result<Self> {
        if matrices.len() < 2 {
            return Err(Error::InvalidTuple(format!("need at least 2 matrices, got {}", matrices.len())));
        }
        let n = matrices[0].rows();
        for (k, m) in matrices.iter().enumerate() {
            if !m.is_square() || m.rows() != n {
                return Err(Error::InvalidTuple(format!(
                    "matrix {k} is {}x{}, expected {n}x{n}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if n < 2 {
            return Err(Error::InvalidTuple("dimension must be at least 2".into()));
        }
        Ok(Self { matrices })
    }

    pub fn matrices(&self) -> &[ExactMatrix] {
        &self.matrices
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn n(&self) -> usize {
        self.matrices[0].rows()
    }

    /// `m·A_i·m⁻¹` for every member.
    pub fn conjugate_by(&self, m: &ExactMatrix) -> Result<MatrixTuple> {
        let inv = m.inverse()?;
        let matrices = self
            .matrices
            .iter()
            .map(|a| m.try_mul(a)?.try_mul(&inv))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { matrices })
    }

    pub fn transposed(&self) -> MatrixTuple {
        Self { matrices: self.matrices.iter().map(ExactMatrix::transpose).collect() }
    }

    pub fn char_polys(&self) -> Vec<Poly> {
        self.matrices.iter().map(|m| m.char_poly().expect("square")).collect()
    }

    /// Monic gcd of all characteristic polynomials.
    pub fn spectrum_gcd(&self) -> Poly {
        Poly::gcd_all(&self.char_polys()).expect("characteristic polynomials are nonzero")
    }

    pub(crate) fn require_invertible(&self) -> Result<()> {
        match self.matrices.iter().position(|m| !m.is_invertible()) {
            Some(index) => Err(Error::Singular { index }),
            None => Ok(()),
        }
    }
}

/// `rank(h − I) = 1`.
pub fn is_pseudo_reflection(h: &ExactMatrix) -> bool {
    h.is_square() && (h - &ExactMatrix::identity(h.rows())).rank() == 1
}

/// Whether `A_i·A_j⁻¹` is a pseudo-reflection, for each pair `i < j`.
pub fn pseudo_reflection_pairs(t: &MatrixTuple) -> Result<Vec<((usize, usize), bool)>> {
    t.require_invertible()?;
    let mut out = Vec::new();
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            // A_iA_j⁻¹ − I = (A_i − A_j)A_j⁻¹
            out.push(((i, j), (&t.matrices[i] - &t.matrices[j]).rank() == 1));
        }
    }
    Ok(out)
}

/// Companion of a monic polynomial: subdiagonal ones and last column
/// `(−c₀, …, −c_{n−1})` from top to bottom.
pub fn companion_matrix(p: &Poly) -> Result<ExactMatrix> {
    if !p.is_monic() || p.degree().unwrap_or(0) == 0 {
        return Err(Error::InvalidArgument(format!("companion needs a monic nonconstant polynomial, got {p}")));
    }
    let n = p.degree().expect("nonzero");
    Ok(ExactMatrix::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -&p.coeff(i)
        } else if i == j + 1 {
            GaussianRational::one()
        } else {
            GaussianRational::zero()
        }
    }))
}

/// Companion of `∏(X − α_j)`; zero is not allowed.
pub fn companion_from_spectrum(values: &[GaussianRational]) -> Result<ExactMatrix> {
    if values.iter().any(GaussianRational::is_zero) {
        return Err(Error::ZeroInSpectrum);
    }
    companion_matrix(&Poly::from_roots(values))
}

/// Companion matrices for `p` spectra whose total intersection is empty.
pub fn levelt_tuple(spectra: &[Vec<GaussianRational>]) -> Result<MatrixTuple> {
    if spectra.len() < 2 {
        return Err(Error::InvalidTuple(format!("need at least 2 spectra, got {}", spectra.len())));
    }
    let n = spectra[0].len();
    if spectra.iter().any(|s| s.len() != n) {
        return Err(Error::InvalidTuple("spectra have different sizes".into()));
    }
    if spectra.iter().flatten().any(GaussianRational::is_zero) {
        return Err(Error::ZeroInSpectrum);
    }
    if let Some(v) = spectra[0].iter().find(|v| spectra[1..].iter().all(|s| s.contains(v))) {
        return Err(Error::CommonSpectralValue(v.to_string()));
    }
    MatrixTuple::new(spectra.iter().map(|s| companion_from_spectrum(s)).collect::<Result<_>>()?)
}

/// Beukers' criterion: for invertible `A, B` with `AB⁻¹` a pseudo-reflection,
/// the group `⟨A, B⟩` is irreducible iff the spectra are disjoint.
pub fn is_irreducible_pair(a: &ExactMatrix, b: &ExactMatrix) -> Result<bool> {
    let t = MatrixTuple::new(vec![a.clone(), b.clone()])?;
    t.require_invertible()?;
    if (a - b).rank() != 1 {
        return Err(Error::NotPseudoReflection { i: 0, j: 1 });
    }
    Ok(t.spectrum_gcd().is_constant())
}
