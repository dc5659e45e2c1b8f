//! Operators `Σ c_{jk} z^j θ^k` with Laurent-polynomial coefficients in `z`,
//! multiplied with the commutation rule `θ·z = z·θ + z`.
//!
//! Terms are kept with `z` powers to the left of `θ` powers. Moving `θ^b`
//! past `z^c` gives `z^c (θ + c)^b`, which is all the multiplication needs.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exact::{GaussianRational, Poly};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ThetaOperator {
    terms: BTreeMap<(i32, u32), GaussianRational>,
}

impl ThetaOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(GaussianRational::one())
    }

    pub fn scalar(c: GaussianRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c·z^j·θ^k`.
    pub fn monomial(c: GaussianRational, j: i32, k: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((j, k), c);
        }
        Self { terms }
    }

    pub fn theta() -> Self {
        Self::monomial(GaussianRational::one(), 0, 1)
    }

    pub fn z() -> Self {
        Self::z_pow(1)
    }

    pub fn z_pow(j: i32) -> Self {
        Self::monomial(GaussianRational::one(), j, 0)
    }

    /// `θ + c`.
    pub fn theta_plus(c: &GaussianRational) -> Self {
        &Self::theta() + &Self::scalar(c.clone())
    }

    /// `z^j · p(θ)` for a polynomial `p`.
    pub fn from_theta_poly(j: i32, p: &Poly) -> Self {
        let terms = p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| ((j, k as u32), c.clone()))
            .collect();
        Self { terms }
    }

    /// Builds from `(z-degree, θ-degree, coefficient)` triples, summing
    /// repeated keys.
    pub fn from_terms<I: IntoIterator<Item = (i32, u32, GaussianRational)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (j, k, c) in it {
            out.add_term(j, k, &c);
        }
        out
    }

    fn add_term(&mut self, j: i32, k: u32, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((j, k)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(j, k));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, u32, &GaussianRational)> {
        self.terms.iter().map(|(&(j, k), c)| (j, k, c))
    }

    pub fn coeff(&self, j: i32, k: u32) -> GaussianRational {
        self.terms.get(&(j, k)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Order in `θ`; `None` stands for −∞ (the zero operator).
    pub fn theta_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, k)| k).max()
    }

    pub fn z_degree(&self) -> Option<i32> {
        self.terms.keys().map(|&(j, _)| j).max()
    }

    pub fn z_low_degree(&self) -> Option<i32> {
        self.terms.keys().map(|&(j, _)| j).min()
    }

    /// The `θ`-polynomial multiplying `z^j`.
    pub fn z_slice(&self, j: i32) -> Poly {
        let top = self
            .terms
            .keys()
            .filter(|&&(jj, _)| jj == j)
            .map(|&(_, k)| k as usize)
            .max();
        let Some(top) = top else { return Poly::zero() };
        Poly::new((0..=top).map(|k| self.coeff(j, k as u32)).collect())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::from_terms(self.terms().map(|(j, k, x)| (j, k, x * c)))
    }
}

fn binomial_row(b: u32) -> Vec<GaussianRational> {
    let mut row = vec![GaussianRational::one()];
    for m in 1..=b as i64 {
        let prev = row.last().expect("nonempty").clone();
        row.push(&prev * &GaussianRational::ratio(b as i64 - m + 1, m));
    }
    row
}

/// Product of two operators in normal form.
pub fn op_mul(p: &ThetaOperator, q: &ThetaOperator) -> ThetaOperator {
    let mut out = ThetaOperator::zero();
    let mut binomials: Vec<Option<Vec<GaussianRational>>> = Vec::new();
    for (&(a, b), c1) in &p.terms {
        if binomials.len() <= b as usize {
            binomials.resize(b as usize + 1, None);
        }
        let row = binomials[b as usize].get_or_insert_with(|| binomial_row(b)).clone();
        for (&(c, d), c2) in &q.terms {
            // z^a θ^b · z^c θ^d = z^{a+c} (θ + c)^b θ^d
            let base = c1 * c2;
            let shift = GaussianRational::from_int(c as i64);
            let mut shift_pow = GaussianRational::one();
            for m in (0..=b).rev() {
                let coef = &(&base * &row[m as usize]) * &shift_pow;
                out.add_term(a + c, m + d, &coef);
                shift_pow = &shift_pow * &shift;
                if shift_pow.is_zero() {
                    break;
                }
            }
        }
    }
    out
}

/// Left-to-right product of a sequence; the empty product is `1`.
pub fn op_product<'a, I: IntoIterator<Item = &'a ThetaOperator>>(ops: I) -> ThetaOperator {
    ops.into_iter().fold(ThetaOperator::one(), |acc, x| op_mul(&acc, x))
}

impl Add for &ThetaOperator {
    type Output = ThetaOperator;
    fn add(self, rhs: &ThetaOperator) -> ThetaOperator {
        let mut out = self.clone();
        for (j, k, c) in rhs.terms() {
            out.add_term(j, k, c);
        }
        out
    }
}

impl Sub for &ThetaOperator {
    type Output = ThetaOperator;
    fn sub(self, rhs: &ThetaOperator) -> ThetaOperator {
        let mut out = self.clone();
        for (j, k, c) in rhs.terms() {
            out.add_term(j, k, &-c);
        }
        out
    }
}

impl Mul for &ThetaOperator {
    type Output = ThetaOperator;
    fn mul(self, rhs: &ThetaOperator) -> ThetaOperator {
        op_mul(self, rhs)
    }
}

impl Neg for &ThetaOperator {
    type Output = ThetaOperator;
    fn neg(self) -> ThetaOperator {
        self.scale(&GaussianRational::from_int(-1))
    }
}

impl std::fmt::Debug for ThetaOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ThetaOperator({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn theta_times_z() {
        // θ·z = zθ + z
        let lhs = op_mul(&ThetaOperator::theta(), &ThetaOperator::z());
        let rhs = ThetaOperator::from_terms([(1, 1, q(1, 1)), (1, 0, q(1, 1))]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn shifted_theta_times_z() {
        // (θ+4)·z = zθ + 5z
        let lhs = op_mul(&ThetaOperator::theta_plus(&q(4, 1)), &ThetaOperator::z());
        let rhs = ThetaOperator::from_terms([(1, 1, q(1, 1)), (1, 0, q(5, 1))]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn unit_and_zero() {
        let p = ThetaOperator::from_terms([(2, 3, q(1, 2)), (-1, 0, q(3, 1))]);
        assert_eq!(op_mul(&p, &ThetaOperator::one()), p);
        assert_eq!(op_mul(&ThetaOperator::one(), &p), p);
        assert!(op_mul(&p, &ThetaOperator::zero()).is_zero());
        assert_eq!(ThetaOperator::zero().theta_degree(), None);
    }

    #[test]
    fn negative_z_powers() {
        // θ·z^{-1} = z^{-1}(θ − 1)
        let lhs = op_mul(&ThetaOperator::theta(), &ThetaOperator::z_pow(-1));
        let rhs = ThetaOperator::from_terms([(-1, 1, q(1, 1)), (-1, 0, q(-1, 1))]);
        assert_eq!(lhs, rhs);
        assert_eq!(op_mul(&ThetaOperator::z_pow(-3), &ThetaOperator::z_pow(3)), ThetaOperator::one());
    }
}
