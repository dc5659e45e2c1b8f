//! Companion matrices of factored operators `M = L′L`, the block matrix of
//! `∂` on `V(M)` in the basis `{B(L′)L, B(L)}`, and the counting formulas
//! for extensions and accessory parameters.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, GaussianRational};

/// Companion of `a₀ + a₁∂ + … + a_r∂^r + ∂^{r+1}`, given ascending
/// coefficients including the final 1: subdiagonal ones and last column
/// `(−a₀, …, −a_r)`.
pub fn companion_of_operator(coeffs: &[GaussianRational]) -> Result<ExactMatrix> {
    let Some((lead, rest)) = coeffs.split_last() else {
        return Err(Error::InvalidOperator("empty coefficient list".into()));
    };
    if !lead.is_one() {
        return Err(Error::InvalidOperator(format!("leading coefficient is {lead}, not 1")));
    }
    if rest.is_empty() {
        return Err(Error::InvalidOperator("order 0".into()));
    }
    let n = rest.len();
    Ok(ExactMatrix::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -&rest[i]
        } else if i == j + 1 {
            GaussianRational::one()
        } else {
            GaussianRational::zero()
        }
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionBlock {
    pub a_l: ExactMatrix,
    pub a_lp: ExactMatrix,
    pub a_m: ExactMatrix,
    pub section: ExactMatrix,
}

impl ExtensionBlock {
    /// Order of `L` (length of vectors in `V(L)`).
    pub fn order_l(&self) -> usize {
        self.a_l.n()
    }

    pub fn order_lp(&self) -> usize {
        self.a_lp.n()
    }
}

/// `A_(M) = [[A_(L′), C], [0, A_(L)]]` where the coupling block `C` has its
/// only nonzero entry, a 1, in its first row and last column. The section
/// `s : V(L) → V(M)` is `S = [0; I]`.
pub fn extension_block(l: &[GaussianRational], lp: &[GaussianRational]) -> Result<ExtensionBlock> {
    let a_l = companion_of_operator(l)?;
    let a_lp = companion_of_operator(lp)?;
    let (r, rp) = (a_l.n(), a_lp.n());
    let mut a_m = ExactMatrix::zeros(r + rp, r + rp);
    for i in 0..rp {
        for j in 0..rp {
            a_m[(i, j)] = a_lp[(i, j)].clone();
        }
    }
    for i in 0..r {
        for j in 0..r {
            a_m[(rp + i, rp + j)] = a_l[(i, j)].clone();
        }
    }
    a_m[(0, rp + r - 1)] = GaussianRational::one();
    let section = ExactMatrix::zeros(rp, r).vstack(&ExactMatrix::identity(r))?;
    Ok(ExtensionBlock { a_l, a_lp, a_m, section })
}

/// `Ψ(u) = A_(M)·S·u − S·A_(L)·u`, projected onto `V(L′)`. The derivative
/// terms cancel, so only the constant part is computed; the `V(L)`
/// component is checked to vanish.
pub fn psi_map(block: &ExtensionBlock, u: &[GaussianRational]) -> Result<Vec<GaussianRational>> {
    if u.len() != block.order_l() {
        return Err(Error::DimensionMismatch(format!(
            "u has length {}, L has order {}",
            u.len(),
            block.order_l()
        )));
    }
    let su = block.section.mul_vec(u)?;
    let lhs = block.a_m.mul_vec(&su)?;
    let rhs = block.section.mul_vec(&block.a_l.mul_vec(u)?)?;
    let diff: Vec<_> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
    let rp = block.order_lp();
    debug_assert!(diff[rp..].iter().all(GaussianRational::is_zero));
    Ok(diff[..rp].to_vec())
}

/// `h¹(V*) = (cardS − 2)·n + Irr(V) + h⁰(V*)`.
pub fn ext_dimension(n: i64, card_s: i64, irr: i64, h0: i64) -> Result<i64> {
    if n < 1 || card_s < 1 || irr < 0 || h0 < 0 {
        return Err(Error::InvalidArgument(format!(
            "need n >= 1, cardS >= 1, irr >= 0, h0 >= 0; got ({n}, {card_s}, {irr}, {h0})"
        )));
    }
    Ok((card_s - 2) * n + irr + h0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParameterCounts {
    /// `n[n(s−2)+s]/2`, parameters of Fuchsian equations of order `n`.
    pub equation_count: i64,
    /// `n²(s−2)+1`, parameters of monodromy representations.
    pub monodromy_count: i64,
    pub rigid: bool,
}

pub fn parameter_counts(n: i64, s: i64) -> Result<ParameterCounts> {
    if n < 1 || s < 1 {
        return Err(Error::InvalidArgument(format!("need n >= 1 and s >= 1; got ({n}, {s})")));
    }
    let twice = n * (n * (s - 2) + s);
    if twice % 2 != 0 {
        return Err(Error::InvalidArgument(format!("n[n(s-2)+s] = {twice} is odd")));
    }
    let equation_count = twice / 2;
    let monodromy_count = n * n * (s - 2) + 1;
    Ok(ParameterCounts { equation_count, monodromy_count, rigid: equation_count == monodromy_count })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn companion_examples() {
        let beta = q(3, 4);
        assert_eq!(companion_of_operator(&[-&beta, q(1, 1)]).unwrap(), ExactMatrix::diagonal(&[beta]));
        assert_eq!(
            companion_of_operator(&[q(0, 1), q(0, 1), q(1, 1)]).unwrap(),
            ExactMatrix::from_i64(&[&[0, 0], &[1, 0]])
        );
        assert_eq!(
            companion_of_operator(&[q(2, 1), q(3, 1), q(1, 1)]).unwrap(),
            ExactMatrix::from_i64(&[&[0, -2], &[1, -3]])
        );
        assert!(companion_of_operator(&[q(1, 1), q(2, 1)]).is_err());
        assert!(companion_of_operator(&[q(1, 1)]).is_err());
        assert!(companion_of_operator(&[]).is_err());
    }

    #[test]
    fn first_order_block() {
        let (alpha, beta) = (q(1, 2), q(-2, 3));
        let block = extension_block(&[-&beta, q(1, 1)], &[-&alpha, q(1, 1)]).unwrap();
        assert_eq!(
            block.a_m,
            ExactMatrix::from_rows(vec![vec![alpha, q(1, 1)], vec![q(0, 1), beta]]).unwrap()
        );
        assert_eq!(block.section, ExactMatrix::from_i64(&[&[0], &[1]]));
    }

    #[test]
    fn second_by_first_order() {
        let block = extension_block(&[q(0, 1), q(0, 1), q(1, 1)], &[q(0, 1), q(1, 1)]).unwrap();
        assert_eq!(block.a_m, ExactMatrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[0, 1, 0]]));
    }

    #[test]
    fn psi_sends_last_to_first() {
        let block = extension_block(&[q(1, 1), q(2, 1), q(3, 1), q(1, 1)], &[q(5, 1), q(7, 1), q(1, 1)]).unwrap();
        let e = |k: usize| (0..3).map(|i| if i == k { q(1, 1) } else { q(0, 1) }).collect::<Vec<_>>();
        assert_eq!(psi_map(&block, &e(2)).unwrap(), vec![q(1, 1), q(0, 1)]);
        assert_eq!(psi_map(&block, &e(0)).unwrap(), vec![q(0, 1), q(0, 1)]);
        assert!(psi_map(&block, &e(0)[..2]).is_err());
    }

    #[test]
    fn counting_fixtures() {
        assert_eq!(ext_dimension(2, 3, 0, 0).unwrap(), 2);
        assert_eq!(ext_dimension(1, 2, 0, 0).unwrap(), 0);
        assert!(ext_dimension(1, 2, -1, 0).is_err());
        let c = parameter_counts(2, 3).unwrap();
        assert_eq!((c.equation_count, c.monodromy_count, c.rigid), (5, 5, true));
        let c = parameter_counts(1, 5).unwrap();
        assert_eq!((c.equation_count, c.monodromy_count, c.rigid), (4, 4, true));
        let c = parameter_counts(3, 3).unwrap();
        assert_eq!((c.equation_count, c.monodromy_count, c.rigid), (9, 10, false));
        assert!(parameter_counts(0, 3).is_err());
    }
}
