use proptest::prelude::*;

use hyperrigid::exact::{q, ExactMatrix, GaussianRational, Subspace};
use hyperrigid::extension::parameter_counts;
use hyperrigid::hypergeometric::{
    build_d, canonical_shift_class, exponents, factor_reducible, is_reducible, HGParams,
};
use hyperrigid::rigidity::{is_irreducible_pair, is_pseudo_reflection};
use hyperrigid::theta::{op_mul, right_divide, RatThetaOperator, ThetaOperator};

fn arb_q() -> impl Strategy<Value = GaussianRational> {
    (-12i64..13, 1i64..5, -4i64..5, 1i64..4, any::<bool>())
        .prop_map(|(a, b, c, d, real)| if real { q(a, b) } else { GaussianRational::complex(a, b, c, d) })
}

fn arb_real_q() -> impl Strategy<Value = GaussianRational> {
    (-24i64..25, 1i64..7).prop_map(|(a, b)| q(a, b))
}

fn arb_op() -> impl Strategy<Value = ThetaOperator> {
    prop::collection::vec((-2i32..3, 0u32..4, arb_q()), 0..5).prop_map(ThetaOperator::from_terms)
}

fn arb_params() -> impl Strategy<Value = HGParams> {
    (2usize..5).prop_flat_map(|n| {
        (prop::collection::vec(arb_q(), n), prop::collection::vec(arb_q(), n))
            .prop_map(|(a, b)| HGParams::new(a, b).unwrap())
    })
}

fn arb_real_params() -> impl Strategy<Value = HGParams> {
    (2usize..5).prop_flat_map(|n| {
        (prop::collection::vec(arb_real_q(), n), prop::collection::vec(arb_real_q(), n))
            .prop_map(|(a, b)| HGParams::new(a, b).unwrap())
    })
}

fn arb_matrix(n: usize) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec(-3i64..4, n * n).prop_map(move |v| {
        ExactMatrix::from_fn(n, n, |i, j| GaussianRational::from_int(v[i * n + j]))
    })
}

fn arb_invertible(n: usize) -> impl Strategy<Value = ExactMatrix> {
    arb_matrix(n).prop_filter("invertible", ExactMatrix::is_invertible)
}

/// Determinant by cofactor expansion along the first row.
fn laplace_det(m: &[Vec<GaussianRational>]) -> GaussianRational {
    let n = m.len();
    if n == 0 {
        return GaussianRational::one();
    }
    let mut total = GaussianRational::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<_>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = &m[0][j] * &laplace_det(&minor);
        total = if j % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ore_multiplication_is_associative(a in arb_op(), b in arb_op(), c in arb_op()) {
        prop_assert_eq!(op_mul(&op_mul(&a, &b), &c), op_mul(&a, &op_mul(&b, &c)));
    }

    #[test]
    fn ore_multiplication_distributes(a in arb_op(), b in arb_op(), c in arb_op()) {
        prop_assert_eq!(op_mul(&a, &(&b + &c)), &op_mul(&a, &b) + &op_mul(&a, &c));
        prop_assert_eq!(op_mul(&(&a + &b), &c), &op_mul(&a, &c) + &op_mul(&b, &c));
        prop_assert_eq!(op_mul(&ThetaOperator::one(), &a), a.clone());
    }

    #[test]
    fn theta_commutes_past_z_powers(j in -4i32..5) {
        // θ·z^j = z^j·(θ + j)
        let lhs = op_mul(&ThetaOperator::theta(), &ThetaOperator::z_pow(j));
        let rhs = op_mul(&ThetaOperator::z_pow(j), &ThetaOperator::theta_plus(&q(j as i64, 1)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn right_division_reconstructs(a in arb_op(), d in arb_op()) {
        prop_assume!(!d.is_zero());
        let (ra, rd) = (RatThetaOperator::from(&a), RatThetaOperator::from(&d));
        let (quot, rem) = right_divide(&ra, &rd).unwrap();
        prop_assert_eq!(&(&quot * &rd) + &rem, ra);
        prop_assert!(rem.theta_degree() < rd.theta_degree() || rem.is_zero());
    }

    #[test]
    fn rank_nullity(rows in 1usize..5, cols in 1usize..5, seed in prop::collection::vec(-2i64..3, 16)) {
        let m = ExactMatrix::from_fn(rows, cols, |i, j| GaussianRational::from_int(seed[i * 4 + j]));
        prop_assert_eq!(m.rank() + m.kernel().dim(), cols);
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn char_poly_matches_cofactor_expansion(m in (1usize..5).prop_flat_map(arb_matrix), x in -5i64..6) {
        let n = m.rows();
        let x = GaussianRational::from_int(x);
        let shifted: Vec<Vec<_>> = (0..n)
            .map(|i| (0..n).map(|j| {
                let a = -&m.row(i)[j];
                if i == j { &a + &x } else { a }
            }).collect())
            .collect();
        prop_assert_eq!(m.char_poly().unwrap().eval(&x), laplace_det(&shifted));
    }

    #[test]
    fn char_poly_is_conjugation_invariant(
        (m, u) in (2usize..5).prop_flat_map(|n| (arb_matrix(n), arb_invertible(n)))
    ) {
        prop_assert_eq!(m.conjugate_by(&u).unwrap().char_poly().unwrap(), m.char_poly().unwrap());
    }

    #[test]
    fn subspace_lattice_laws(
        a in prop::collection::vec(prop::collection::vec(-2i64..3, 4), 0..4),
        b in prop::collection::vec(prop::collection::vec(-2i64..3, 4), 0..4),
    ) {
        let to = |vs: &Vec<Vec<i64>>| {
            let vs: Vec<Vec<_>> = vs.iter().map(|v| v.iter().map(|&x| GaussianRational::from_int(x)).collect()).collect();
            Subspace::span(4, &vs).unwrap()
        };
        let (sa, sb) = (to(&a), to(&b));
        let ab = sa.intersect(&sb).unwrap();
        prop_assert_eq!(&ab, &sb.intersect(&sa).unwrap());
        prop_assert_eq!(&sa.intersect(&sa).unwrap(), &sa);
        prop_assert_eq!(sa.sum(&sb).unwrap().dim() + ab.dim(), sa.dim() + sb.dim());
    }

    #[test]
    fn fuchs_relation(p in arb_params()) {
        let n = p.n() as i64;
        prop_assert_eq!(exponents(&p).total(), q(n * (n - 1) / 2, 1));
    }

    #[test]
    fn build_d_shape(p in arb_params()) {
        let d = build_d(&p);
        prop_assert_eq!(d.theta_degree(), Some(p.n() as u32));
        prop_assert_eq!(d.z_degree(), Some(1));
        prop_assert_eq!(d.z_low_degree(), Some(0));
    }

    #[test]
    fn reducibility_is_shift_invariant(p in arb_params(), s in -3i64..4) {
        prop_assert_eq!(is_reducible(&p.shifted(s)), is_reducible(&p));
        if let Ok(c) = canonical_shift_class(&p) {
            prop_assert_eq!(is_reducible(&c), is_reducible(&p));
        }
    }

    #[test]
    fn greedy_factorization_reproduces_operator(p in arb_real_params()) {
        prop_assume!(is_reducible(&p));
        let admissible = p.alpha().iter().any(|a| {
            p.beta().iter().any(|b| (a - b).to_i64().is_some_and(|m| m >= 0))
        });
        let f = match factor_reducible(&p) {
            Ok(f) => f,
            Err(e) => {
                prop_assert!(!admissible, "{}", e);
                prop_assert_eq!(e, hyperrigid::Error::NoAdmissibleMatching);
                return Ok(());
            }
        };
        // each matched α_i is lowered onto its β_j before splitting
        let mut lowered = p.alpha().to_vec();
        for pair in &f.pairs {
            prop_assert_eq!(&(&p.alpha()[pair.alpha_index] - &p.beta()[pair.beta_index]), &q(pair.steps as i64, 1));
            lowered[pair.alpha_index] = p.beta()[pair.beta_index].clone();
        }
        let target = HGParams::new(lowered, p.beta().to_vec()).unwrap();
        prop_assert_eq!(f.product(), build_d(&target));
        prop_assert_eq!(f.factors.len() + f.reduced_alpha.len(), p.n());
    }

    #[test]
    fn pseudo_reflection_is_conjugation_invariant(
        (h, u) in (2usize..5).prop_flat_map(|n| (arb_matrix(n), arb_invertible(n)))
    ) {
        prop_assert_eq!(is_pseudo_reflection(&h.conjugate_by(&u).unwrap()), is_pseudo_reflection(&h));
    }

    #[test]
    fn beukers_verdict_is_conjugation_invariant(
        (a, col, u) in (2usize..4).prop_flat_map(|n| (arb_invertible(n), prop::collection::vec(-3i64..4, n), arb_invertible(n)))
    ) {
        let n = a.rows();
        let b = ExactMatrix::from_fn(n, n, |i, j| if j == n - 1 { GaussianRational::from_int(col[i]) } else { a.row(i)[j].clone() });
        prop_assume!(b.is_invertible() && b != a);
        let before = is_irreducible_pair(&a, &b).unwrap();
        let after = is_irreducible_pair(&a.conjugate_by(&u).unwrap(), &b.conjugate_by(&u).unwrap()).unwrap();
        prop_assert_eq!(before, after);
    }
}

#[test]
fn counts_are_rigid_only_in_known_cases() {
    for n in 1..=50 {
        for s in 1..=50 {
            let c = parameter_counts(n, s).unwrap();
            assert_eq!(c.rigid, n == 1 || (n, s) == (2, 3), "({n}, {s})");
        }
    }
}
