//! Seeded random instances for sweeps, benches and the CLI.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{ExactMatrix, GaussianRational, Poly};
use crate::hypergeometric::{is_reducible, ContiguityKind, HGParams};
use crate::rigidity::{companion_from_spectrum, levelt_tuple, MatrixTuple};

/// The generator for instance `index` of a run seeded with `seed`; each
/// instance gets its own ChaCha stream.
pub fn instance_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// `a/b` with `|a| ≤ max_num` and `1 ≤ b ≤ max_den`.
pub fn rational<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> GaussianRational {
    GaussianRational::ratio(rng.random_range(-max_num..=max_num), rng.random_range(1..=max_den))
}

/// A Gaussian rational whose imaginary part is zero half the time.
pub fn gaussian_rational<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> GaussianRational {
    let re = rational(rng, max_num, max_den);
    if rng.random_bool(0.5) {
        re
    } else {
        &re + &(&rational(rng, max_num, max_den) * &GaussianRational::i())
    }
}

pub fn nonzero_rational<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> GaussianRational {
    loop {
        let x = rational(rng, max_num, max_den);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Gaussian-rational parameters of order `n`.
pub fn gaussian_params<R: Rng>(rng: &mut R, n: usize) -> HGParams {
    let mut draw = || (0..n).map(|_| gaussian_rational(rng, 6, 5)).collect::<Vec<_>>();
    let alpha = draw();
    let beta = draw();
    HGParams::new(alpha, beta).expect("order at least 2")
}

/// Real rational parameters with denominators at most `max_den` and no
/// integer difference `α_i − β_j`.
pub fn irreducible_real_params<R: Rng>(rng: &mut R, n: usize, max_den: i64) -> HGParams {
    loop {
        let mut draw = || (0..n).map(|_| rational(rng, 2 * max_den, max_den)).collect::<Vec<_>>();
        let alpha = draw();
        let beta = draw();
        let p = HGParams::new(alpha, beta).expect("order at least 2");
        if !is_reducible(&p) {
            return p;
        }
    }
}

/// One identity of each kind, with indices and shifts drawn for `p`.
pub fn contiguity_kinds<R: Rng>(rng: &mut R, p: &HGParams) -> Vec<ContiguityKind> {
    vec![
        ContiguityKind::LeftFactor { delta: gaussian_rational(rng, 6, 5) },
        ContiguityKind::RightFactor { delta: gaussian_rational(rng, 6, 5) },
        ContiguityKind::AlphaStep { j: rng.random_range(0..p.n()) },
        ContiguityKind::BetaStep { j: rng.random_range(0..p.n()) },
        ContiguityKind::ZShift { s: rng.random_range(-3..=3) },
    ]
}

/// Integer matrix with entries in `[-2, 2]` and nonzero determinant.
pub fn invertible_matrix<R: Rng>(rng: &mut R, n: usize) -> ExactMatrix {
    loop {
        let m = ExactMatrix::from_fn(n, n, |_, _| GaussianRational::from_int(rng.random_range(-2..=2)));
        if m.is_invertible() {
            return m;
        }
    }
}

/// `p` pairwise different spectra of size `n` drawn from small nonzero
/// rationals, with no value common to all of them.
pub fn disjoint_spectra<R: Rng>(rng: &mut R, p: usize, n: usize) -> Vec<Vec<GaussianRational>> {
    loop {
        let spectra: Vec<Vec<_>> = (0..p).map(|_| (0..n).map(|_| nonzero_rational(rng, 6, 2)).collect()).collect();
        let polys: Vec<Poly> = spectra.iter().map(|s| Poly::from_roots(s)).collect();
        let distinct = (0..p).all(|i| (i + 1..p).all(|j| polys[i] != polys[j]));
        if distinct && !spectra[0].iter().any(|v| spectra[1..].iter().all(|s| s.contains(v))) {
            return spectra;
        }
    }
}

/// Companion matrices for disjoint spectra, conjugated by a random
/// invertible matrix. Returns the canonical tuple and the moved one.
pub fn conjugated_levelt_tuple<R: Rng>(rng: &mut R, p: usize, n: usize) -> (MatrixTuple, MatrixTuple) {
    let canon = levelt_tuple(&disjoint_spectra(rng, p, n)).expect("disjoint nonzero spectra");
    let q = invertible_matrix(rng, n);
    let moved = canon.conjugate_by(&q).expect("square");
    (canon, moved)
}

/// Invertible matrices sharing `n − 1` columns (or rows, when `rows` is
/// set), pairwise distinct, conjugated by a random basis change.
pub fn pseudo_reflection_family<R: Rng>(rng: &mut R, p: usize, n: usize, rows: bool) -> MatrixTuple {
    loop {
        let base = ExactMatrix::from_fn(n, n, |_, _| GaussianRational::from_int(rng.random_range(-3..=3))).to_rows();
        let free = rng.random_range(0..n);
        let members: Vec<ExactMatrix> = (0..p)
            .map(|_| {
                let col: Vec<_> = (0..n).map(|_| GaussianRational::from_int(rng.random_range(-3..=3))).collect();
                let m = ExactMatrix::from_fn(n, n, |i, j| if j == free { col[i].clone() } else { base[i][j].clone() });
                if rows {
                    m.transpose()
                } else {
                    m
                }
            })
            .collect();
        let distinct = (0..p).all(|i| (i + 1..p).all(|j| members[i] != members[j]));
        if !distinct || !members.iter().all(ExactMatrix::is_invertible) {
            continue;
        }
        let t = MatrixTuple::new(members).expect("square, same size");
        return t.conjugate_by(&invertible_matrix(rng, n)).expect("square");
    }
}

/// A pair `(A, B)` with `A − B` of rank one, conjugated by a random basis
/// change. Spectra overlap often since they are drawn from a small set.
pub fn pseudo_reflection_pair<R: Rng>(rng: &mut R, n: usize) -> (ExactMatrix, ExactMatrix) {
    let t = if rng.random_bool(0.5) {
        let spectra: Vec<Vec<_>> = (0..2)
            .map(|_| (0..n).map(|_| GaussianRational::from_int([-2, -1, 1, 2, 3][rng.random_range(0..5)])).collect())
            .collect();
        let a = companion_from_spectrum(&spectra[0]).expect("nonzero");
        let b = companion_from_spectrum(&spectra[1]).expect("nonzero");
        if a == b {
            return pseudo_reflection_pair(rng, n);
        }
        MatrixTuple::new(vec![a, b]).expect("square").conjugate_by(&invertible_matrix(rng, n)).expect("square")
    } else {
        let rows = rng.random_bool(0.5);
        pseudo_reflection_family(rng, 2, n, rows)
    };
    let [a, b] = <[ExactMatrix; 2]>::try_from(t.matrices().to_vec()).expect("pair");
    (a, b)
}
