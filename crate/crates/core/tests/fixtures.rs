use num_complex::Complex64;

use hyperrigid::exact::{q, ExactMatrix, GaussianRational, Poly};
use hyperrigid::extension::{companion_of_operator, ext_dimension, extension_block, parameter_counts, psi_map};
use hyperrigid::hypergeometric::{build_d, exponents, factor_reducible, is_reducible, HGParams};
use hyperrigid::monodromy::{build_monodromy, local_spectra, rigidity_check_numeric};
use hyperrigid::rigidity::{
    common_frame, common_spectrum_certificate, coordinate_subspace, find_stabilized_subspace, CommonFrame,
    MatrixTuple, Side,
};
use hyperrigid::theta::{left_factor_check, op_mul, parse_operator, right_gcd, RatThetaOperator, ThetaOperator};

fn op(s: &str) -> ThetaOperator {
    parse_operator(s).unwrap()
}

fn hg(alpha: &[GaussianRational], beta: &[GaussianRational]) -> HGParams {
    HGParams::new(alpha.to_vec(), beta.to_vec()).unwrap()
}

#[test]
fn theta_past_z() {
    assert_eq!(op_mul(&op("t"), &op("z")), op("z*t + z"));
    assert_eq!(op_mul(&op("t + 4"), &op("z")), op("z*t + 5*z"));
}

#[test]
fn gauss_operator_shape() {
    let (a, b, c) = (q(1, 3), q(-2, 5), q(7, 4));
    let d = build_d(&hg(&[a.clone(), b.clone()], &[q(1, 1), c.clone()]));
    let one = GaussianRational::one();
    let expect = &op_mul(&op("t"), &ThetaOperator::theta_plus(&(&c - &one)))
        - &op_mul(&op("z"), &op_mul(&ThetaOperator::theta_plus(&a), &ThetaOperator::theta_plus(&b)));
    assert_eq!(d, expect);
    let e = exponents(&hg(&[a.clone(), b.clone()], &[q(1, 1), c.clone()]));
    assert_eq!(e.at_zero, vec![q(0, 1), &one - &c]);
    assert_eq!(e.at_one, vec![q(0, 1), &(&c - &a) - &b]);
    assert_eq!(e.at_infinity, vec![a, b]);
}

#[test]
fn worked_example_left_factor() {
    let d = build_d(&hg(&[q(0, 1), q(0, 1), q(-2, 1)], &[q(1, 1), q(1, 1), q(-1, 1)]));
    assert_eq!(left_factor_check(&d, &op("1 - z")).unwrap(), Some(op("t^2*(t - 2)")));
    assert_eq!(d, op("t^2*(t-2) - z*t^2*(t-2)"));
    let f = factor_reducible(&hg(&[q(0, 1), q(0, 1), q(-2, 1)], &[q(1, 1), q(1, 1), q(-1, 1)])).unwrap();
    assert_eq!(f.factors, vec![q(-1, 1)]);
    assert_eq!((f.reduced_alpha.clone(), f.reduced_beta.clone()), (vec![q(0, 1), q(-2, 1)], vec![q(1, 1), q(1, 1)]));
    // α₁ = 0 is first lowered onto β₃ = −1
    assert_eq!(f.product(), build_d(&hg(&[q(-1, 1), q(0, 1), q(-2, 1)], &[q(1, 1), q(1, 1), q(-1, 1)])));
}

#[test]
fn z_shift_shares_no_right_factor() {
    let p = hg(&[q(1, 3), q(2, 7)], &[q(1, 2), q(4, 5)]);
    for s in [1, 2, -1] {
        let g = right_gcd(
            &RatThetaOperator::from(&ThetaOperator::z_pow(s)),
            &RatThetaOperator::from(&build_d(&p.shifted(s as i64))),
        )
        .unwrap();
        assert_eq!(g, RatThetaOperator::one());
    }
}

#[test]
fn gauss_reducibility_examples() {
    assert!(!is_reducible(&hg(&[q(1, 2), q(1, 3)], &[q(1, 1), q(1, 5)])));
    assert!(is_reducible(&hg(&[q(5, 2), q(1, 3)], &[q(1, 2), q(1, 4)])));
}

#[test]
fn first_order_companion_and_extension() {
    let (alpha, beta) = (q(2, 3), q(-1, 4));
    assert_eq!(companion_of_operator(&[-&beta, q(1, 1)]).unwrap(), ExactMatrix::diagonal(std::slice::from_ref(&beta)));
    let block = extension_block(&[-&beta, q(1, 1)], &[-&alpha, q(1, 1)]).unwrap();
    assert_eq!(
        block.a_m,
        ExactMatrix::from_rows(vec![vec![alpha.clone(), q(1, 1)], vec![q(0, 1), beta.clone()]]).unwrap()
    );
    assert_eq!(block.section, ExactMatrix::from_i64(&[&[0], &[1]]));
}

#[test]
fn psi_sends_last_basis_vector_to_first() {
    let l = [q(2, 1), q(3, 1), q(1, 1)];
    let lp = [q(5, 1), q(0, 1), q(-1, 1), q(1, 1)];
    let block = extension_block(&l, &lp).unwrap();
    assert_eq!(block.a_m.rows(), l.len() + lp.len() - 2);
    assert_eq!(psi_map(&block, &[q(0, 1), q(1, 1)]).unwrap(), vec![q(1, 1), q(0, 1), q(0, 1)]);
    assert_eq!(psi_map(&block, &[q(1, 1), q(0, 1)]).unwrap(), vec![q(0, 1); 3]);
    assert_eq!(psi_map(&block, &[q(4, 1), q(-3, 7)]).unwrap(), vec![q(-3, 7), q(0, 1), q(0, 1)]);
}

#[test]
fn counting_examples() {
    assert_eq!(ext_dimension(2, 3, 0, 0).unwrap(), 2);
    assert_eq!(ext_dimension(1, 2, 0, 0).unwrap(), 0);
    let c = parameter_counts(2, 3).unwrap();
    assert_eq!((c.equation_count, c.monodromy_count, c.rigid), (5, 5, true));
    let c = parameter_counts(1, 5).unwrap();
    assert_eq!((c.equation_count, c.monodromy_count, c.rigid), (4, 4, true));
    let c = parameter_counts(3, 3).unwrap();
    assert_eq!((c.equation_count, c.monodromy_count, c.rigid), (9, 10, false));
}

#[test]
fn equal_kernels_give_column_frame() {
    // three matrices differing only in the middle column: D_j share ker = span(e₁, e₃)
    let base = [[2, 1, 0], [1, 3, 1], [0, 1, 1]];
    let with_col = |c: [i64; 3]| {
        ExactMatrix::from_fn(3, 3, |i, j| GaussianRational::from_int(if j == 1 { c[i] } else { base[i][j] }))
    };
    let t = MatrixTuple::new(vec![with_col([1, 3, 1]), with_col([0, 2, 5]), with_col([4, -1, 1])]).unwrap();
    let f = common_frame(&t).unwrap();
    assert_eq!(f.side, Side::Columns);
    assert!(f.verify(&t).unwrap());
}

#[test]
fn shared_block_certificate() {
    // block upper-triangular with the same upper-left 2×2 block and the same
    // first two columns
    let m = |x: i64, y: i64| ExactMatrix::from_i64(&[&[1, 2, x], &[3, 1, y], &[0, 0, 5 + x]]);
    let t = MatrixTuple::new(vec![m(1, 1), m(2, -3), m(-1, 4)]).unwrap();
    let frame = CommonFrame::standard_columns(3);
    let cert = common_spectrum_certificate(&t, &frame, &coordinate_subspace(3, 0..2)).unwrap();
    let block = ExactMatrix::from_i64(&[&[1, 2], &[3, 1]]).char_poly().unwrap();
    assert_eq!(cert.factor, block);
    assert!(cert.gcd.is_divisible_by(&block).unwrap());
}

#[test]
fn equal_matrices_certificate_is_whole_poly() {
    let a = ExactMatrix::from_i64(&[&[2, 1], &[0, 3]]);
    let t = MatrixTuple::new(vec![a.clone(), a.clone()]).unwrap();
    let frame = CommonFrame::standard_columns(2);
    let cert = common_spectrum_certificate(&t, &frame, &coordinate_subspace(2, 0..1)).unwrap();
    assert_eq!(cert.gcd, a.char_poly().unwrap());
}

#[test]
fn upper_triangular_line_and_transposed_hyperplane() {
    let lambda = q(4, 1);
    let m = |x: i64| ExactMatrix::from_i64(&[&[4, 1, x], &[0, 2, 1], &[0, 1, 3 - x]]);
    let t = MatrixTuple::new(vec![m(1), m(-2)]).unwrap();
    let line = find_stabilized_subspace(&t, &CommonFrame::standard_columns(3), &lambda).unwrap();
    assert_eq!(line.kind(), "line");
    assert_eq!(line.subspace(), &coordinate_subspace(3, 0..1));
    let tt = t.transposed();
    let frame = CommonFrame::standard_columns(3).transposed().unwrap();
    let hyper = find_stabilized_subspace(&tt, &frame, &lambda).unwrap();
    assert_eq!(hyper.kind(), "hyperplane");
    assert_eq!(hyper.subspace(), &coordinate_subspace(3, 1..3));
}

#[test]
fn local_spectra_multiply_to_one() {
    let p = hg(&[q(1, 3), q(2, 3)], &[q(1, 2), q(1, 1)]);
    let s = local_spectra(&p).unwrap();
    let all: Complex64 = s.at_zero.iter().chain(&s.at_one).chain(&s.at_infinity).product();
    assert!((all - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    assert!(s.at_zero.iter().chain(&s.at_one).all(|z| (z.norm() - 1.0).abs() < 1e-12));
    let same = local_spectra(&hg(&[q(1, 5), q(3, 7)], &[q(1, 5), q(3, 7)])).unwrap();
    assert!(same.at_one.iter().all(|z| (z - Complex64::new(1.0, 0.0)).norm() < 1e-12));
}

#[test]
fn order_four_round_trip() {
    let p = hg(&[q(1, 7), q(2, 5), q(5, 6), q(-1, 3)], &[q(1, 2), q(1, 1), q(3, 4), q(1, 9)]);
    let t = build_monodromy(&p, 1e-10).unwrap();
    for seed in 0..5 {
        let r = rigidity_check_numeric(&t, 1e-8, seed).unwrap();
        assert!(r.recovered, "{r:?}");
    }
}

#[test]
fn reduced_spectrum_gcd() {
    let a = ExactMatrix::from_i64(&[&[2, 5], &[0, 1]]);
    let b = ExactMatrix::from_i64(&[&[2, 0], &[7, 3]]);
    let g = a.char_poly().unwrap().gcd(&b.char_poly().unwrap()).unwrap();
    assert!(g.is_divisible_by(&Poly::from_roots(&[q(2, 1)])).unwrap());
}
