//! The field `K = Q(i)(z)` of rational functions, kept reduced with a monic
//! denominator.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::poly::Poly;
use super::scalar::GaussianRational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den)?;
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        let lc = den.leading().expect("nonzero").inv()?;
        Ok(Self { num: num.scale(&lc), den: den.scale(&lc) })
    }

    pub fn zero() -> Self {
        Self { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        Self { num: p, den: Poly::one() }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// `c·z^j` for any integer `j`.
    pub fn monomial(c: GaussianRational, j: i32) -> Self {
        let mono = |k: usize, c: GaussianRational| {
            let mut v = vec![GaussianRational::zero(); k + 1];
            v[k] = c;
            Poly::new(v)
        };
        if j >= 0 {
            Self::from_poly(mono(j as usize, c))
        } else if c.is_zero() {
            Self::zero()
        } else {
            Self { num: Poly::constant(c), den: mono((-j) as usize, GaussianRational::one()) }
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == Poly::one() && self.den == Poly::one()
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// `z·d/dz`.
    pub fn theta_derivation(&self) -> Self {
        // z (N'D − N D') / D²
        let top = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let top = &top * &Poly::x();
        Self::new(top, &self.den * &self.den).expect("nonzero denominator")
    }

    /// When the denominator is a power of `z`, the Laurent expansion as
    /// `(exponent, coefficient)` pairs with nonzero coefficients.
    pub fn to_laurent(&self) -> Option<Vec<(i32, GaussianRational)>> {
        let shift = self.den.degree()?;
        let is_pure_power = self.den.coeffs()[..shift].iter().all(GaussianRational::is_zero);
        if !is_pure_power {
            return None;
        }
        Some(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k as i32 - shift as i32, c.clone()))
                .collect(),
        )
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num.display_in("z"))
        } else {
            write!(f, "({})/({})", self.num.display_in("z"), self.den.display_in("z"))
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone()).expect("den");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(num, &self.den * &rhs.den).expect("den")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("den")
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for &RationalFunction {
    type Output = Result<RationalFunction>;
    fn div(self, rhs: &RationalFunction) -> Result<RationalFunction> {
        Ok(self * &rhs.inv()?)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}
