//! Operators `Σ f_k(z) θ^k` over the field `K(z)`, where right Euclidean
//! division and right gcds live.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::ore::ThetaOperator;
use crate::error::{Error, Result};
use crate::exact::{GaussianRational, RationalFunction};

/// `coeffs[k]` multiplies `θ^k` (coefficient on the left). No trailing zero
/// coefficient is stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatThetaOperator {
    coeffs: Vec<RationalFunction>,
}

impl RatThetaOperator {
    pub fn new(mut coeffs: Vec<RationalFunction>) -> Self {
        while coeffs.last().is_some_and(RationalFunction::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(vec![RationalFunction::one()])
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn theta_degree(&self) -> Option<u32> {
        self.coeffs.len().checked_sub(1).map(|d| d as u32)
    }

    pub fn leading(&self) -> Option<&RationalFunction> {
        self.coeffs.last()
    }

    /// `f · self` for a coefficient `f` placed on the left.
    pub fn left_scale(&self, f: &RationalFunction) -> Self {
        Self::new(self.coeffs.iter().map(|c| f * c).collect())
    }

    /// Normalizes the leading coefficient to 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) if !lc.is_one() => self.left_scale(&lc.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    /// Back to Laurent coefficients when every denominator is a power of `z`.
    pub fn to_laurent(&self) -> Option<ThetaOperator> {
        let mut terms = Vec::new();
        for (k, f) in self.coeffs.iter().enumerate() {
            for (j, c) in f.to_laurent()? {
                terms.push((j, k as u32, c));
            }
        }
        Some(ThetaOperator::from_terms(terms))
    }
}

impl From<&ThetaOperator> for RatThetaOperator {
    fn from(p: &ThetaOperator) -> Self {
        let Some(deg) = p.theta_degree() else {
            return Self::zero();
        };
        let mut coeffs = vec![RationalFunction::zero(); deg as usize + 1];
        for (j, k, c) in p.terms() {
            coeffs[k as usize] = &coeffs[k as usize] + &RationalFunction::monomial(c.clone(), j);
        }
        Self::new(coeffs)
    }
}

/// `θ^a · g = Σ_i C(a,i) θ^i(g) θ^{a−i}`, returned as coefficients by θ-power.
fn theta_pow_times(a: usize, g: &RationalFunction) -> Vec<RationalFunction> {
    let mut out = vec![RationalFunction::zero(); a + 1];
    let mut deriv = g.clone();
    let mut binom = GaussianRational::one();
    for i in 0..=a {
        if deriv.is_zero() {
            break;
        }
        out[a - i] = &deriv * &RationalFunction::constant(binom.clone());
        deriv = deriv.theta_derivation();
        binom = &binom * &GaussianRational::ratio((a - i) as i64, i as i64 + 1);
    }
    out
}

impl Mul for &RatThetaOperator {
    type Output = RatThetaOperator;
    fn mul(self, rhs: &RatThetaOperator) -> RatThetaOperator {
        if self.is_zero() || rhs.is_zero() {
            return RatThetaOperator::zero();
        }
        let mut out = vec![RationalFunction::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, f) in self.coeffs.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            for (b, g) in rhs.coeffs.iter().enumerate() {
                if g.is_zero() {
                    continue;
                }
                for (m, h) in theta_pow_times(a, g).iter().enumerate() {
                    if !h.is_zero() {
                        out[m + b] = &out[m + b] + &(f * h);
                    }
                }
            }
        }
        RatThetaOperator::new(out)
    }
}

impl Add for &RatThetaOperator {
    type Output = RatThetaOperator;
    fn add(self, rhs: &RatThetaOperator) -> RatThetaOperator {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = RationalFunction::zero();
        RatThetaOperator::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) + rhs.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &RatThetaOperator {
    type Output = RatThetaOperator;
    fn sub(self, rhs: &RatThetaOperator) -> RatThetaOperator {
        let neg = rhs.left_scale(&RationalFunction::constant(GaussianRational::from_int(-1)));
        self + &neg
    }
}

/// `p = quotient·d + remainder` with `θ-deg(remainder) < θ-deg(d)`.
pub fn right_divide(
    p: &RatThetaOperator,
    d: &RatThetaOperator,
) -> Result<(RatThetaOperator, RatThetaOperator)> {
    let dl_inv = d.leading().ok_or(Error::DivisionByZero)?.inv()?;
    let dd = d.coeffs.len() - 1;
    let mut rem = p.clone();
    let mut quot = vec![RationalFunction::zero(); p.coeffs.len().saturating_sub(dd)];
    while let Some(rd) = rem.theta_degree() {
        let rd = rd as usize;
        if rd < dd {
            break;
        }
        // c·θ^{rd−dd}·d has leading term c·lc(d)·θ^{rd}
        let c = rem.leading().expect("nonzero") * &dl_inv;
        let mut mono = vec![RationalFunction::zero(); rd - dd + 1];
        mono[rd - dd] = c.clone();
        let step = &RatThetaOperator::new(mono) * d;
        rem = &rem - &step;
        quot[rd - dd] = &quot[rd - dd] + &c;
        debug_assert!(rem.theta_degree().is_none_or(|x| (x as usize) < rd));
    }
    Ok((RatThetaOperator::new(quot), rem))
}

/// Monic right gcd by the Euclidean algorithm.
pub fn right_gcd(p: &RatThetaOperator, q: &RatThetaOperator) -> Result<RatThetaOperator> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::ZeroGcd);
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    while !b.is_zero() {
        let (_, r) = right_divide(&a, &b)?;
        a = b;
        b = r.monic();
    }
    Ok(a.monic())
}

impl fmt::Display for RatThetaOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*t"),
                _ => format!("({c})*t^{k}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for RatThetaOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatThetaOperator({self})")
    }
}
