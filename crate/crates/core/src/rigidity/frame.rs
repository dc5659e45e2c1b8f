//! Recovering a basis in which all members of a tuple share `n − 1` rows or
//! columns, given that every quotient `A_iA_j⁻¹` is a pseudo-reflection.

use serde::Serialize;

use super::MatrixTuple;
use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, GaussianRational, Subspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Rows,
    Columns,
}

/// In the coordinates `A′ = U·A·U⁻¹` every member has the same entries in
/// the rows (or columns) listed in `shared_indices`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommonFrame {
    pub basis_change: ExactMatrix,
    pub side: Side,
    pub shared_indices: Vec<usize>,
}

impl CommonFrame {
    /// The frame of the standard basis with the first `n − 1` columns shared.
    pub fn standard_columns(n: usize) -> Self {
        Self { basis_change: ExactMatrix::identity(n), side: Side::Columns, shared_indices: (0..n - 1).collect() }
    }

    pub fn n(&self) -> usize {
        self.basis_change.rows()
    }

    /// The index that is not shared.
    pub fn free_index(&self) -> usize {
        (0..self.n()).find(|k| !self.shared_indices.contains(k)).expect("n - 1 shared indices")
    }

    pub fn apply(&self, t: &MatrixTuple) -> Result<MatrixTuple> {
        t.conjugate_by(&self.basis_change)
    }

    /// The matching frame of the transposed tuple: `(UAU⁻¹)ᵀ = U⁻ᵀAᵀUᵀ`,
    /// with rows and columns swapped.
    pub fn transposed(&self) -> Result<Self> {
        Ok(Self {
            basis_change: self.basis_change.inverse()?.transpose(),
            side: match self.side {
                Side::Rows => Side::Columns,
                Side::Columns => Side::Rows,
            },
            shared_indices: self.shared_indices.clone(),
        })
    }

    /// Checks the shared rows or columns entry by entry.
    pub fn verify(&self, t: &MatrixTuple) -> Result<bool> {
        if self.n() != t.n() || self.shared_indices.len() + 1 != t.n() {
            return Ok(false);
        }
        let moved = self.apply(t)?;
        let first = &moved.matrices()[0];
        Ok(moved.matrices()[1..].iter().all(|m| {
            self.shared_indices.iter().all(|&k| match self.side {
                Side::Rows => m.row(k) == first.row(k),
                Side::Columns => m.column(k) == first.column(k),
            })
        }))
    }

    /// The span `E` of the shared basis vectors, in frame coordinates.
    pub(crate) fn shared_span(&self) -> Subspace {
        let n = self.n();
        let vs: Vec<_> = self.shared_indices.iter().map(|&k| unit(n, k)).collect();
        Subspace::span(n, &vs).expect("lengths")
    }
}

pub(crate) fn unit(n: usize, k: usize) -> Vec<GaussianRational> {
    let mut v = vec![GaussianRational::zero(); n];
    v[k] = GaussianRational::one();
    v
}

/// Adds vectors from `pool` to `basis` until it spans `target_dim`
/// dimensions, skipping dependent ones.
fn extend_from(basis: &mut Vec<Vec<GaussianRational>>, pool: &[Vec<GaussianRational>], n: usize, target_dim: usize) {
    for v in pool {
        if basis.len() >= target_dim {
            return;
        }
        let mut trial = basis.clone();
        trial.push(v.clone());
        if Subspace::span(n, &trial).expect("lengths").dim() == trial.len() {
            *basis = trial;
        }
    }
}

fn standard_pool(n: usize) -> Vec<Vec<GaussianRational>> {
    (0..n).map(|k| unit(n, k)).collect()
}

/// Finds a common frame by case analysis on the pairwise differences.
///
/// Write `D_j = A₁ − A_j = u_j f_jᵀ`. Pairwise rank one forces either all
/// kernels `ker f_j` to agree (shared columns) or all images `span u_j` to
/// agree (shared rows). In the column case a basis of the common kernel `W`
/// is completed by one vector. In the row case the basis starts from
/// `W₁ ∩ W₂` for the first two distinct kernels, then places the image
/// generator `w` as `e_n` (reflection), `e₁` (unipotent, `w ∈ W₁ ∩ W₂`) or
/// `e_{n−1}` (unipotent otherwise).
pub fn common_frame(t: &MatrixTuple) -> Result<CommonFrame> {
    t.require_invertible()?;
    let n = t.n();
    let ms = t.matrices();
    let mut diffs = Vec::new();
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            let d = &ms[i] - &ms[j];
            if d.rank() != 1 {
                return Err(Error::NotPseudoReflection { i, j });
            }
            diffs.push(d);
        }
    }
    let kernels: Vec<Subspace> = diffs.iter().map(ExactMatrix::kernel).collect();
    let images: Vec<Subspace> = diffs.iter().map(ExactMatrix::image).collect();

    let frame = if kernels.iter().all(|k| k == &kernels[0]) {
        let b = kernels[0].completed_basis();
        CommonFrame { basis_change: b.inverse()?, side: Side::Columns, shared_indices: (0..n - 1).collect() }
    } else if images.iter().all(|im| im == &images[0]) {
        rows_frame(&diffs[0], &kernels, &images[0], n)?
    } else {
        return Err(Error::NoCommonFrame("pairwise differences share neither kernel nor image".into()));
    };
    if !frame.verify(t)? {
        return Err(Error::NoCommonFrame("constructed basis failed verification".into()));
    }
    Ok(frame)
}

fn rows_frame(d12: &ExactMatrix, kernels: &[Subspace], image: &Subspace, n: usize) -> Result<CommonFrame> {
    let w1 = &kernels[0];
    let w2 = kernels.iter().find(|k| *k != w1).expect("kernels differ");
    let core = if n == 2 { Subspace::zero(n) } else { w1.intersect(w2)? };
    let w = image.basis()[0].clone();
    // any vector outside W₁; D₁₂ maps it onto a multiple of w
    let outside = standard_pool(n).into_iter().find(|v| !w1.contains(v).expect("ambient")).expect("W₁ is proper");

    let mut basis: Vec<Vec<GaussianRational>>;
    let free;
    if !w1.contains(&w)? {
        // reflection: e₁..e_{n−2} span W₁∩W₂, e_{n−1} completes W₁, e_n = w
        basis = core.basis().to_vec();
        extend_from(&mut basis, w1.basis(), n, n - 1);
        basis.push(w);
        free = n - 1;
    } else if core.contains(&w)? {
        // unipotent with w ∈ W₁∩W₂: e₁ = w
        basis = vec![w];
        extend_from(&mut basis, core.basis(), n, core.dim());
        extend_from(&mut basis, w1.basis(), n, n - 1);
        basis.push(outside);
        free = 0;
    } else {
        // unipotent with w ∉ W₁∩W₂: e_{n−1} = w
        basis = core.basis().to_vec();
        basis.push(w);
        basis.push(outside);
        free = n - 2;
    }
    debug_assert_eq!(d12.mul_vec(&basis[n - 1]).map(|v| v.iter().any(|x| !x.is_zero())), Ok(true));
    let b = ExactMatrix::from_columns(n, &basis)?;
    Ok(CommonFrame {
        basis_change: b.inverse()?,
        side: Side::Rows,
        shared_indices: (0..n).filter(|&k| k != free).collect(),
    })
}
