//! The Ore ring of differential operators in `θ = z·d/dz`.

pub mod ore;
pub mod rational;
pub mod text;

use std::collections::BTreeMap;

pub use ore::{op_mul, op_product, ThetaOperator};
pub use rational::{right_divide, right_gcd, RatThetaOperator};
pub use text::parse_operator;

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, GaussianRational};

/// Finds `q` with `p = f·q`, if one exists with Laurent coefficients.
///
/// Degrees in `θ` and the extreme powers of `z` are additive under
/// multiplication, which pins down the finite box of monomials `q` can
/// use; the coefficients then come from one exact linear solve.
pub fn left_factor_check(p: &ThetaOperator, f: &ThetaOperator) -> Result<Option<ThetaOperator>> {
    let (Some(df), Some(f_lo), Some(f_hi)) = (f.theta_degree(), f.z_low_degree(), f.z_degree()) else {
        return Err(Error::DivisionByZero);
    };
    let (Some(dp), Some(p_lo), Some(p_hi)) = (p.theta_degree(), p.z_low_degree(), p.z_degree()) else {
        return Ok(Some(ThetaOperator::zero()));
    };
    if dp < df || p_hi - f_hi < p_lo - f_lo {
        return Ok(None);
    }
    let unknowns: Vec<(i32, u32)> = (p_lo - f_lo..=p_hi - f_hi)
        .flat_map(|j| (0..=dp - df).map(move |k| (j, k)))
        .collect();
    let images: Vec<ThetaOperator> = unknowns
        .iter()
        .map(|&(j, k)| op_mul(f, &ThetaOperator::monomial(GaussianRational::one(), j, k)))
        .collect();
    let mut rows: BTreeMap<(i32, u32), usize> = BTreeMap::new();
    for op in images.iter().chain(std::iter::once(p)) {
        for (j, k, _) in op.terms() {
            let next = rows.len();
            rows.entry((j, k)).or_insert(next);
        }
    }
    let mut a = ExactMatrix::zeros(rows.len(), unknowns.len());
    for (col, op) in images.iter().enumerate() {
        for (j, k, c) in op.terms() {
            a[(rows[&(j, k)], col)] = c.clone();
        }
    }
    let mut b = vec![GaussianRational::zero(); rows.len()];
    for (j, k, c) in p.terms() {
        b[rows[&(j, k)]] = c.clone();
    }
    let Some(x) = a.solve(&b)? else {
        return Ok(None);
    };
    let q = ThetaOperator::from_terms(unknowns.iter().zip(x).map(|(&(j, k), c)| (j, k, c)));
    debug_assert_eq!(&op_mul(f, &q), p);
    Ok(Some(q))
}
