//! Numeric monodromy triples of hypergeometric equations with real rational
//! parameters, built from companion matrices.

use std::f64::consts::TAU;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::GaussianRational;
use crate::hypergeometric::{exponents, reducibility_witness, HGParams};

/// Dense complex matrix with finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatMatrix(DMatrix<Complex64>);

impl FloatMatrix {
    pub fn new(m: DMatrix<Complex64>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch(format!("{}x{} is not square", m.nrows(), m.ncols())));
        }
        if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Numeric("non-finite entry".into()));
        }
        Ok(Self(m))
    }

    pub fn identity(n: usize) -> Self {
        Self(DMatrix::identity(n, n))
    }

    pub fn from_diagonal(values: &[Complex64]) -> Self {
        Self(DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(values)))
    }

    pub fn n(&self) -> usize {
        self.0.nrows()
    }

    pub fn as_matrix(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn inverse(&self) -> Result<Self> {
        self.0.clone().try_inverse().map(Self).ok_or_else(|| Error::Numeric("singular matrix".into()))
    }

    pub fn mul(&self, rhs: &FloatMatrix) -> FloatMatrix {
        Self(&self.0 * &rhs.0)
    }

    pub fn determinant(&self) -> Complex64 {
        self.0.determinant()
    }

    /// Largest entry modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &FloatMatrix) -> f64 {
        (&self.0 - &other.0).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn singular_values(&self) -> Vec<f64> {
        self.0.clone().svd(false, false).singular_values.iter().copied().collect()
    }

    /// Coefficients of `det(X·I − self)`, ascending, by Faddeev–LeVerrier.
    pub fn char_poly(&self) -> Vec<Complex64> {
        let n = self.n();
        let id = DMatrix::<Complex64>::identity(n, n);
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
        coeffs[n] = Complex64::new(1.0, 0.0);
        let mut mk = id.clone();
        for k in 1..=n {
            let am = &self.0 * &mk;
            let c = -am.trace() / k as f64;
            coeffs[n - k] = c;
            mk = am + &id * c;
        }
        coeffs
    }
}

/// Entries as `[re, im]` pairs, row by row.
impl Serialize for FloatMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<[f64; 2]>> = (0..self.0.nrows())
            .map(|i| (0..self.0.ncols()).map(|j| [self.0[(i, j)].re, self.0[(i, j)].im]).collect())
            .collect();
        rows.serialize(s)
    }
}

/// `e^{2πiq}` for real rational `q`, reduced mod 1 exactly before rounding.
pub fn exp_2pi_i(q: &GaussianRational) -> Result<Complex64> {
    if !q.is_real() {
        return Err(Error::NonRealParameter(q.to_string()));
    }
    let (frac, _) = q.reduce_real_mod_one();
    Ok(Complex64::from_polar(1.0, TAU * frac.to_f64_pair().0))
}

fn exp_all(qs: &[GaussianRational]) -> Result<Vec<Complex64>> {
    qs.iter().map(exp_2pi_i).collect()
}

/// Ascending coefficients of `∏(X − r)`.
pub fn poly_from_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut p = vec![Complex64::new(1.0, 0.0)];
    for r in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); p.len() + 1];
        for (k, c) in p.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * r;
        }
        p = next;
    }
    p
}

/// Companion of a monic polynomial given by ascending coefficients.
pub fn companion(coeffs: &[Complex64]) -> FloatMatrix {
    let n = coeffs.len() - 1;
    let mut m = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
    for i in 1..n {
        m[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..n {
        m[(i, n - 1)] = -coeffs[i];
    }
    FloatMatrix(m)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LocalSpectra {
    pub at_zero: Vec<Complex64>,
    pub at_one: Vec<Complex64>,
    pub at_infinity: Vec<Complex64>,
}

/// `e^{2πi·e}` for every local exponent `e`.
pub fn local_spectra(p: &HGParams) -> Result<LocalSpectra> {
    for x in p.alpha().iter().chain(p.beta()) {
        if !x.is_real() {
            return Err(Error::NonRealParameter(x.to_string()));
        }
    }
    let e = exponents(p);
    Ok(LocalSpectra {
        at_zero: exp_all(&e.at_zero)?,
        at_one: exp_all(&e.at_one)?,
        at_infinity: exp_all(&e.at_infinity)?,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonodromyTriple {
    pub m0: FloatMatrix,
    pub m1: FloatMatrix,
    pub minf: FloatMatrix,
    pub tolerance: f64,
    /// `‖m_inf·m1·m0 − I‖_max`.
    pub residual: f64,
}

impl MonodromyTriple {
    pub fn product(&self) -> FloatMatrix {
        self.minf.mul(&self.m1).mul(&self.m0)
    }
}

/// `m_inf = A`, `m1 = A⁻¹B`, `m0 = B⁻¹` with `A`, `B` the companions of
/// `∏(X − e^{2πiα_j})` and `∏(X − e^{2πiβ_j})`, so `m_inf·m1·m0 = I`.
pub fn build_monodromy(p: &HGParams, tol: f64) -> Result<MonodromyTriple> {
    if tol.is_nan() || tol < 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance {tol} must be nonnegative")));
    }
    let spectra = local_spectra(p)?;
    if let Some((alpha, beta)) = reducibility_witness(p) {
        return Err(Error::ReducibleParameters { alpha, beta });
    }
    let a = companion(&poly_from_roots(&spectra.at_infinity));
    let b = companion(&poly_from_roots(&exp_all(p.beta())?));
    let a_inv = a.inverse()?;
    let m0 = b.inverse()?;
    let m1 = a_inv.mul(&b);
    let residual = a.mul(&m1).mul(&m0).max_abs_diff(&FloatMatrix::identity(p.n()));
    if residual > tol {
        return Err(Error::Numeric(format!("product residual {residual:e} exceeds {tol:e}")));
    }
    Ok(MonodromyTriple { m0, m1, minf: a, tolerance: tol, residual })
}

/// Largest coefficient difference between the characteristic polynomial of
/// `m` and `∏(X − r)` over `expected`.
pub fn spectrum_deviation(m: &FloatMatrix, expected: &[Complex64]) -> f64 {
    let got = m.char_poly();
    let want = poly_from_roots(expected);
    got.iter().zip(&want).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
}

/// Exactly one singular value of `m − I` above `tol`.
pub fn check_pseudo_reflection_numeric(m: &FloatMatrix, tol: f64) -> bool {
    let d = FloatMatrix(&m.0 - DMatrix::identity(m.n(), m.n()));
    d.singular_values().iter().filter(|&&s| s > tol).count() == 1
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RigidityReport {
    pub recovered: bool,
    /// Largest entry error of the recovered companions.
    pub max_error: f64,
    /// Condition number of the cyclic basis.
    pub condition: f64,
    /// `σ_{n−1}/σ₁` of the constraint rows cutting out the cyclic line.
    pub chain_gap: f64,
}

/// Unitary `Q` from the QR factorization of a seeded random matrix.
pub fn random_unitary(n: usize, seed: u64) -> FloatMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = DMatrix::from_fn(n, n, |_, _| {
        Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    });
    FloatMatrix(m.qr().q())
}

fn condition_number(m: &DMatrix<Complex64>) -> f64 {
    let s = m.clone().svd(false, false).singular_values;
    s.max() / s.min()
}

/// Conjugates `m_inf` and `m0⁻¹` by a random unitary, then rebuilds their
/// simultaneous companion form from the cyclic vector spanning
/// `W ∩ AW ∩ … ∩ A^{n−2}W`, where `W = ker(A − B)`.
pub fn rigidity_check_numeric(t: &MonodromyTriple, tol: f64, seed: u64) -> Result<RigidityReport> {
    let n = t.minf.n();
    let a0 = t.minf.clone();
    let b0 = t.m0.inverse()?;
    let q = random_unitary(n, seed);
    let q_adj = FloatMatrix(q.0.adjoint());
    let a = q.mul(&a0).mul(&q_adj);
    let b = q.mul(&b0).mul(&q_adj);
    let a_inv = a.inverse()?;

    // A − B = u·fᵀ; W = ker fᵀ
    let svd = (&a.0 - &b.0).svd(true, true);
    let v_t = svd.v_t.as_ref().ok_or_else(|| Error::Numeric("SVD failed".into()))?;
    let top = (0..n).max_by(|&i, &j| svd.singular_values[i].total_cmp(&svd.singular_values[j])).expect("n >= 1");
    let f = v_t.row(top).into_owned();

    // x ∈ A^kW  ⟺  fᵀA^{−k}x = 0, for k = 0..n−2
    let mut rows = DMatrix::from_element(n.max(2) - 1, n, Complex64::new(0.0, 0.0));
    let mut acc = f.clone();
    for k in 0..n - 1 {
        rows.set_row(k, &acc);
        acc = &acc * &a_inv.0;
    }
    let eig = (rows.adjoint() * &rows).svd(false, true);
    let vt = eig.v_t.as_ref().ok_or_else(|| Error::Numeric("SVD failed".into()))?;
    let svals = &eig.singular_values;
    let order: Vec<usize> = {
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&i, &j| svals[j].total_cmp(&svals[i]));
        idx
    };
    let chain_gap = if n >= 2 { (svals[order[n - 2]] / svals[order[0]]).sqrt() } else { 1.0 };
    if chain_gap.is_nan() || chain_gap <= tol {
        return Err(Error::Numeric(format!("cyclic chain is degenerate (gap {chain_gap:e})")));
    }
    let x = vt.row(order[n - 1]).adjoint();

    let mut v = x;
    for _ in 0..n.saturating_sub(2) {
        v = &a_inv.0 * v;
    }
    v /= Complex64::new(v.norm(), 0.0);
    let mut krylov = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
    krylov.set_column(0, &v);
    for k in 1..n {
        let next = &a.0 * krylov.column(k - 1);
        krylov.set_column(k, &next);
    }
    let condition = condition_number(&krylov);
    let basis = FloatMatrix(krylov);
    let u = basis.inverse()?;
    let a_rec = u.mul(&a).mul(&basis);
    let b_rec = u.mul(&b).mul(&basis);
    let max_error = a_rec.max_abs_diff(&a0).max(b_rec.max_abs_diff(&b0));
    Ok(RigidityReport { recovered: max_error <= tol, max_error, condition, chain_gap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn hg(alpha: &[(i64, i64)], beta: &[(i64, i64)]) -> HGParams {
        HGParams::new(
            alpha.iter().map(|&(a, b)| q(a, b)).collect(),
            beta.iter().map(|&(a, b)| q(a, b)).collect(),
        )
        .unwrap()
    }

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn half_integer_spectra() {
        let s = local_spectra(&hg(&[(1, 2), (1, 2)], &[(1, 1), (1, 1)])).unwrap();
        let one = Complex64::new(1.0, 0.0);
        assert!(s.at_infinity.iter().all(|&z| close(z, -one)));
        assert!(s.at_zero.iter().all(|&z| close(z, one)));
        assert!(s.at_one.iter().all(|&z| close(z, one)));
    }

    #[test]
    fn quarter_parameters_give_x2_plus_1() {
        let t = build_monodromy(&hg(&[(1, 4), (3, 4)], &[(1, 2), (1, 1)]), 1e-10).unwrap();
        let expect = DMatrix::from_row_slice(
            2,
            2,
            &[0.0, -1.0, 1.0, 0.0].map(|x| Complex64::new(x, 0.0)),
        );
        assert!(t.minf.max_abs_diff(&FloatMatrix(expect)) < 1e-12);
        assert!(t.residual <= 1e-10);
        assert!(check_pseudo_reflection_numeric(&t.m1, 1e-8));
        let r = rigidity_check_numeric(&t, 1e-8, 7).unwrap();
        assert!(r.recovered, "{r:?}");
    }

    #[test]
    fn reducible_and_complex_rejected() {
        assert_eq!(
            build_monodromy(&hg(&[(5, 2), (1, 3)], &[(1, 2), (1, 4)]), 1e-10).unwrap_err(),
            Error::ReducibleParameters { alpha: 0, beta: 0 }
        );
        let p = HGParams::new(vec![GaussianRational::i(), q(1, 3)], vec![q(1, 1), q(1, 5)]).unwrap();
        assert!(matches!(local_spectra(&p), Err(Error::NonRealParameter(_))));
    }

    #[test]
    fn numeric_pseudo_reflection_examples() {
        assert!(!check_pseudo_reflection_numeric(&FloatMatrix::identity(3), 1e-8));
        let d = FloatMatrix::from_diagonal(&[1.0, 1.0, -1.0].map(|x| Complex64::new(x, 0.0)));
        assert!(check_pseudo_reflection_numeric(&d, 1e-8));
    }

    #[test]
    fn determinant_of_m1() {
        let p = hg(&[(1, 3), (2, 3)], &[(1, 2), (1, 1)]);
        let t = build_monodromy(&p, 1e-10).unwrap();
        let expect = exp_2pi_i(&(&(&q(1, 2) + &q(1, 1)) - &q(1, 1))).unwrap();
        assert!((t.m1.determinant() - expect).norm() < 1e-12);
    }
}
