//! Subspaces of `Q(i)^n` stored by a reduced row echelon basis, so two
//! subspaces are equal iff their stored bases are equal.

use super::matrix::ExactMatrix;
use super::scalar::GaussianRational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<GaussianRational>>,
}

impl Subspace {
    /// Span of arbitrary (possibly dependent) vectors of length `ambient`.
    pub fn span(ambient: usize, vectors: &[Vec<GaussianRational>]) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch(format!("vector length != {ambient}")));
        }
        if vectors.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let m = ExactMatrix::from_rows(vectors.to_vec())?;
        let rref = m.rref();
        let basis = (0..rref.pivots.len()).map(|i| rref.matrix.row(i)).collect();
        Ok(Self { ambient, basis })
    }

    pub fn zero(ambient: usize) -> Self {
        Self { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, &ExactMatrix::identity(ambient).to_rows()).expect("square")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<GaussianRational>] {
        &self.basis
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis_matrix(&self) -> ExactMatrix {
        ExactMatrix::from_columns(self.ambient, &self.basis).expect("lengths")
    }

    fn check_ambient(&self, other: usize) -> Result<()> {
        if self.ambient == other {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!("ambient {} vs {other}", self.ambient)))
        }
    }

    pub fn contains(&self, v: &[GaussianRational]) -> Result<bool> {
        self.check_ambient(v.len())?;
        let mut vs = self.basis.clone();
        vs.push(v.to_vec());
        Ok(Self::span(self.ambient, &vs)?.dim() == self.dim())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other.ambient)?;
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Self::span(self.ambient, &vs)
    }

    /// `self ∩ other`, from the kernel of `[U | −W]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Self::zero(self.ambient));
        }
        let u = self.basis_matrix();
        let w = -&other.basis_matrix();
        let k = u.hstack(&w)?.kernel();
        let vectors: Vec<_> = k
            .basis()
            .iter()
            .map(|c| u.mul_vec(&c[..self.dim()]).expect("shape"))
            .collect();
        Self::span(self.ambient, &vectors)
    }

    /// `m·self`.
    pub fn image_under(&self, m: &ExactMatrix) -> Result<Subspace> {
        if m.cols() != self.ambient {
            return Err(Error::DimensionMismatch("image".into()));
        }
        let vs: Vec<_> = self.basis.iter().map(|v| m.mul_vec(v).expect("shape")).collect();
        Self::span(m.rows(), &vs)
    }

    pub fn is_invariant_under(&self, m: &ExactMatrix) -> Result<bool> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch("invariance needs a square matrix".into()));
        }
        self.image_under(m)?.is_subspace_of(self)
    }

    /// `{x : ⟨v, x⟩ = 0 for all v in self}` with the bilinear pairing
    /// `Σ vᵢxᵢ` (no conjugation), the dual-space annihilator.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Self::full(self.ambient);
        }
        ExactMatrix::from_rows(self.basis.clone()).expect("rect").kernel()
    }

    /// This subspace's basis followed by standard vectors completing it to
    /// a basis of the ambient space, as columns of an invertible matrix.
    pub fn completed_basis(&self) -> ExactMatrix {
        let mut cols = self.basis.clone();
        let mut current = self.clone();
        for k in 0..self.ambient {
            if current.dim() == self.ambient {
                break;
            }
            let mut e = vec![GaussianRational::zero(); self.ambient];
            e[k] = GaussianRational::one();
            if !current.contains(&e).expect("ambient") {
                current = current.sum(&Self::span(self.ambient, &[e.clone()]).expect("len")).expect("ambient");
                cols.push(e);
            }
        }
        ExactMatrix::from_columns(self.ambient, &cols).expect("lengths")
    }
}

pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.intersect(b)
}

pub fn image(m: &ExactMatrix, s: &Subspace) -> Result<Subspace> {
    s.image_under(m)
}

pub fn is_invariant(m: &ExactMatrix, s: &Subspace) -> Result<bool> {
    s.is_invariant_under(m)
}
