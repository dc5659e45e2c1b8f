//! Dense univariate polynomials over the Gaussian rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::scalar::GaussianRational;
use crate::error::{Error, Result};

/// Coefficients in ascending degree, never with a trailing zero. The zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<GaussianRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(GaussianRational::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `X`.
    pub fn x() -> Self {
        Self::new(vec![GaussianRational::zero(), GaussianRational::one()])
    }

    /// `∏ (X − r)` over the given roots (with multiplicity).
    pub fn from_roots(roots: &[GaussianRational]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            &acc * &Self::new(vec![-r, GaussianRational::one()])
        })
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(GaussianRational::is_one)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides through by the leading coefficient. The zero polynomial is
    /// returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inv().expect("nonzero leading")),
            _ => self.clone(),
        }
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussianRational::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GaussianRational::from_int(k as i64))
                .collect(),
        )
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dl = d.leading().ok_or(Error::DivisionByZero)?.inv()?;
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![GaussianRational::zero(); r.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &r[k + dd] * &dl;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &(&c * dc);
            }
            quot[k] = c;
        }
        r.truncate(dd);
        Ok((Poly::new(quot), Poly::new(r)))
    }

    pub fn rem(&self, d: &Poly) -> Result<Poly> {
        Ok(self.div_rem(d)?.1)
    }

    /// True iff `d` divides `self` exactly. `d` must be nonzero.
    pub fn is_divisible_by(&self, d: &Poly) -> Result<bool> {
        Ok(self.rem(d)?.is_zero())
    }

    /// Monic gcd over the Gaussian-rational field.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Gcd of a nonempty family.
    pub fn gcd_all<'a, I: IntoIterator<Item = &'a Poly>>(polys: I) -> Result<Poly> {
        let mut it = polys.into_iter();
        let first = it.next().ok_or(Error::ZeroGcd)?.clone();
        it.try_fold(first, |acc, p| acc.gcd(p))
            .and_then(|g| if g.is_zero() { Err(Error::ZeroGcd) } else { Ok(g.monic()) })
    }

    /// Renders in the variable `var`, highest degree first, e.g. `X^2 - 3*X + 2`.
    /// Rational roots of a polynomial with real rational coefficients, by
    /// the rational root test. Returns `None` for non-real coefficients or
    /// when the scaled end coefficients exceed `10¹²`.
    pub fn rational_roots(&self) -> Option<Vec<GaussianRational>> {
        if self.coeffs.iter().any(|c| !c.is_real()) {
            return None;
        }
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.re().denom()));
        let ints: Vec<i64> = self.coeffs.iter().map(|c| (c.re() * &den).to_integer().to_i64()).collect::<Option<_>>()?;
        let mut roots = Vec::new();
        let low = ints.iter().position(|&c| c != 0)?;
        if low > 0 {
            roots.push(GaussianRational::zero());
        }
        let (a0, an) = (ints[low].unsigned_abs(), ints.last()?.unsigned_abs());
        if a0 > 1_000_000_000_000 || an > 1_000_000_000_000 {
            return None;
        }
        for p in divisors(a0) {
            for q in divisors(an) {
                for sign in [1, -1] {
                    let x = GaussianRational::ratio(sign * p as i64, q as i64);
                    if !roots.contains(&x) && self.eval(&x).is_zero() {
                        roots.push(x);
                    }
                }
            }
        }
        Some(roots)
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            push_term(&mut out, c, &mono);
        }
        out
    }
}

/// Appends `± coefficient*monomial` to a sum being rendered. Real
/// coefficients carry their sign into the separator, others are
/// parenthesized.
pub(crate) fn push_term(out: &mut String, c: &GaussianRational, mono: &str) {
    let (negative, body) = if c.is_real() {
        let neg = c.re() < &num_rational::BigRational::from_integer(0.into());
        let abs = if neg { -c } else { c.clone() };
        (neg, abs.to_string())
    } else {
        (false, format!("({c})"))
    };
    let coef_is_unit = c.is_real() && body == "1";
    let term = match (mono.is_empty(), coef_is_unit) {
        (true, _) => body,
        (false, true) => mono.to_string(),
        (false, false) => format!("{body}*{mono}"),
    };
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    out.push_str(&term);
}

/// Serialized as ascending coefficients.
fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

impl serde::Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("X"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::q;
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| q(c, 1)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 0, 0]).degree(), Some(0));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn gcd_examples() {
        // (X²−1, X−1) → X−1
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        // (X², X+1) → 1
        assert_eq!(p(&[0, 0, 1]).gcd(&p(&[1, 1])).unwrap(), Poly::one());
        assert_eq!(Poly::zero().gcd(&Poly::zero()), Err(Error::ZeroGcd));
        assert_eq!(Poly::zero().gcd(&p(&[2, 4])).unwrap(), p(&[1, 2]).monic());
    }

    #[test]
    fn from_roots_and_display() {
        let f = Poly::from_roots(&[q(1, 1), q(2, 1)]);
        assert_eq!(f, p(&[2, -3, 1]));
        assert_eq!(f.to_string(), "X^2 - 3*X + 2");
        let g = Poly::new(vec![GaussianRational::i(), q(-1, 2)]);
        assert_eq!(g.display_in("z"), "-1/2*z + (i)");
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-9i64..10, 1i64..4, -3i64..4), 0..6).prop_map(|v| {
            Poly::new(v.into_iter().map(|(a, b, c)| GaussianRational::complex(a, b, c, 2)).collect())
        })
    }

    #[test]
    fn rational_roots_found() {
        let f = &Poly::from_roots(&[q(2, 3), q(-5, 1), q(0, 1)]) * &p(&[1, 0, 1]);
        let mut r = f.scale(&q(7, 2)).rational_roots().unwrap();
        r.sort_by_key(|x| x.to_string());
        assert_eq!(r, vec![q(-5, 1), q(0, 1), q(2, 3)]);
        assert_eq!(Poly::new(vec![GaussianRational::i(), q(1, 1)]).rational_roots(), None);
    }

    proptest! {
        #[test]
        fn div_rem_reconstructs(a in arb_poly(), d in arb_poly()) {
            prop_assume!(!d.is_zero());
            let (qq, r) = a.div_rem(&d).unwrap();
            prop_assert_eq!(&(&qq * &d) + &r, a);
            prop_assert!(r.degree() < d.degree() || r.is_zero());
        }

        #[test]
        fn gcd_divides_both(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
            let (ac, bc) = (&a * &c, &b * &c);
            let g = ac.gcd(&bc).unwrap();
            prop_assert!(g.is_monic());
            prop_assert!(ac.is_divisible_by(&g).unwrap());
            prop_assert!(bc.is_divisible_by(&g).unwrap());
            prop_assert!(g.is_divisible_by(&c.monic()).unwrap());
        }
    }
}
