//! Generalized hypergeometric operators
//! `D(α;β) = (θ+β₁−1)…(θ+β_n−1) − z(θ+α₁)…(θ+α_n)`.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::GaussianRational;
use crate::theta::{op_mul, op_product, ThetaOperator};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct HGParams {
    alpha: Vec<GaussianRational>,
    beta: Vec<GaussianRational>,
}

#[derive(Deserialize)]
struct RawParams {
    alpha: Vec<GaussianRational>,
    beta: Vec<GaussianRational>,
}

impl TryFrom<RawParams> for HGParams {
    type Error = Error;
    fn try_from(raw: RawParams) -> Result<Self> {
        Self::new(raw.alpha, raw.beta)
    }
}

impl HGParams {
    pub fn new(alpha: Vec<GaussianRational>, beta: Vec<GaussianRational>) -> Result<Self> {
        if alpha.len() != beta.len() {
            return Err(Error::InvalidParameters(format!(
                "alpha has {} entries, beta has {}",
                alpha.len(),
                beta.len()
            )));
        }
        if alpha.len() < 2 {
            return Err(Error::InvalidParameters(format!("order {} is below 2", alpha.len())));
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> &[GaussianRational] {
        &self.alpha
    }

    pub fn beta(&self) -> &[GaussianRational] {
        &self.beta
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    /// Adds `s` to every parameter.
    pub fn shifted(&self, s: i64) -> Self {
        let s = GaussianRational::from_int(s);
        Self {
            alpha: self.alpha.iter().map(|a| a + &s).collect(),
            beta: self.beta.iter().map(|b| b + &s).collect(),
        }
    }

    fn with_alpha(&self, j: usize, value: GaussianRational) -> Self {
        let mut out = self.clone();
        out.alpha[j] = value;
        out
    }

    fn with_beta(&self, j: usize, value: GaussianRational) -> Self {
        let mut out = self.clone();
        out.beta[j] = value;
        out
    }

    fn appended(&self, a: GaussianRational, b: GaussianRational) -> Self {
        let mut out = self.clone();
        out.alpha.push(a);
        out.beta.push(b);
        out
    }
}

/// `D(α;β)` for lists of any common length, including the degenerate
/// orders that appear after factoring out linear pieces.
pub fn hypergeometric_operator(alpha: &[GaussianRational], beta: &[GaussianRational]) -> ThetaOperator {
    debug_assert_eq!(alpha.len(), beta.len());
    let one = GaussianRational::one();
    let left: Vec<_> = beta.iter().map(|b| ThetaOperator::theta_plus(&(b - &one))).collect();
    let right: Vec<_> = alpha.iter().map(ThetaOperator::theta_plus).collect();
    &op_product(&left) - &op_mul(&ThetaOperator::z(), &op_product(&right))
}

pub fn build_d(p: &HGParams) -> ThetaOperator {
    hypergeometric_operator(&p.alpha, &p.beta)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalExponents {
    pub at_zero: Vec<GaussianRational>,
    pub at_one: Vec<GaussianRational>,
    pub at_infinity: Vec<GaussianRational>,
}

impl LocalExponents {
    pub fn total(&self) -> GaussianRational {
        self.at_zero.iter().chain(&self.at_one).chain(&self.at_infinity).sum()
    }
}

pub fn exponents(p: &HGParams) -> LocalExponents {
    let one = GaussianRational::one();
    let n = p.n();
    let mut at_one: Vec<_> = (0..n as i64 - 1).map(GaussianRational::from_int).collect();
    let excess: GaussianRational = p.beta.iter().zip(&p.alpha).map(|(b, a)| b - a).sum();
    at_one.push(&excess - &one);
    LocalExponents {
        at_zero: p.beta.iter().map(|b| &one - b).collect(),
        at_one,
        at_infinity: p.alpha.clone(),
    }
}

/// First `(i, j)` (row-major, 0-based) with `α_i − β_j ∈ ℤ`.
pub fn reducibility_witness(p: &HGParams) -> Option<(usize, usize)> {
    for (i, a) in p.alpha.iter().enumerate() {
        for (j, b) in p.beta.iter().enumerate() {
            if (a - b).is_integer() {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn is_reducible(p: &HGParams) -> bool {
    reducibility_witness(p).is_some()
}

/// Index pairs `(i, j)` split by the sign of the integer `α_i − β_j`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ReducibilityPartition {
    pub e0: Vec<(usize, usize)>,
    pub eplus: Vec<(usize, usize)>,
    pub eminus: Vec<(usize, usize)>,
}

impl ReducibilityPartition {
    pub fn is_empty(&self) -> bool {
        self.e0.is_empty() && self.eplus.is_empty() && self.eminus.is_empty()
    }
}

pub fn partition(p: &HGParams) -> ReducibilityPartition {
    let mut out = ReducibilityPartition::default();
    for (i, a) in p.alpha.iter().enumerate() {
        for (j, b) in p.beta.iter().enumerate() {
            let d = a - b;
            if !d.is_integer() {
                continue;
            }
            if d.is_zero() {
                out.e0.push((i, j));
            } else if d.re().is_positive() {
                out.eplus.push((i, j));
            } else {
                out.eminus.push((i, j));
            }
        }
    }
    out
}

/// The five contiguity identities between hypergeometric operators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContiguityKind {
    /// `(θ+δ−1)·D(α;β) = D(α,δ; β,δ)`
    LeftFactor { delta: GaussianRational },
    /// `D(α;β)·(θ+δ) = D(α,δ; β,δ+1)`
    RightFactor { delta: GaussianRational },
    /// `D(α;β)·(θ+α_j−1) = (θ+α_j−1)·D(α with α_j−1; β)`
    AlphaStep { j: usize },
    /// `D(α;β)·(θ+β_j) = (θ+β_j−1)·D(α; β with β_j+1)`
    BetaStep { j: usize },
    /// `D(α;β)·z^s = z^s·D(α+s; β+s)`
    ZShift { s: i32 },
}

impl ContiguityKind {
    pub fn name(&self) -> &'static str {
        match self {
            Self::LeftFactor { .. } => "left_factor",
            Self::RightFactor { .. } => "right_factor",
            Self::AlphaStep { .. } => "alpha_step",
            Self::BetaStep { .. } => "beta_step",
            Self::ZShift { .. } => "z_shift",
        }
    }
}

/// Both sides of a contiguity identity, fully expanded.
pub fn contiguity_sides(kind: &ContiguityKind, p: &HGParams) -> Result<(ThetaOperator, ThetaOperator)> {
    let one = GaussianRational::one();
    let d = build_d(p);
    let check_index = |j: usize| {
        if j < p.n() {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("index {j} out of range for order {}", p.n())))
        }
    };
    Ok(match kind {
        ContiguityKind::LeftFactor { delta } => (
            op_mul(&ThetaOperator::theta_plus(&(delta - &one)), &d),
            build_d(&p.appended(delta.clone(), delta.clone())),
        ),
        ContiguityKind::RightFactor { delta } => (
            op_mul(&d, &ThetaOperator::theta_plus(delta)),
            build_d(&p.appended(delta.clone(), delta + &one)),
        ),
        ContiguityKind::AlphaStep { j } => {
            check_index(*j)?;
            let f = ThetaOperator::theta_plus(&(&p.alpha[*j] - &one));
            let lowered = p.with_alpha(*j, &p.alpha[*j] - &one);
            (op_mul(&d, &f), op_mul(&f, &build_d(&lowered)))
        }
        ContiguityKind::BetaStep { j } => {
            check_index(*j)?;
            let raised = p.with_beta(*j, &p.beta[*j] + &one);
            (
                op_mul(&d, &ThetaOperator::theta_plus(&p.beta[*j])),
                op_mul(&ThetaOperator::theta_plus(&(&p.beta[*j] - &one)), &build_d(&raised)),
            )
        }
        ContiguityKind::ZShift { s } => {
            let zs = ThetaOperator::z_pow(*s);
            (op_mul(&d, &zs), op_mul(&zs, &build_d(&p.shifted(*s as i64))))
        }
    })
}

pub fn contiguity_check(kind: &ContiguityKind, p: &HGParams) -> Result<bool> {
    let (lhs, rhs) = contiguity_sides(kind, p)?;
    Ok(lhs == rhs)
}

/// Moves every real part into `[0, 1)` by integer shifts. Defined only when
/// no `β_j − α_i` is an integer.
pub fn canonical_shift_class(p: &HGParams) -> Result<HGParams> {
    if let Some((i, j)) = reducibility_witness(p) {
        return Err(Error::IntegerDifference { alpha: i, beta: j });
    }
    let reduce = |v: &[GaussianRational]| v.iter().map(|x| x.reduce_real_mod_one().0).collect();
    Ok(HGParams { alpha: reduce(&p.alpha), beta: reduce(&p.beta) })
}

/// One matched pair `(i, j)` with `α_i − β_j = steps ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchedPair {
    pub alpha_index: usize,
    pub beta_index: usize,
    pub steps: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub pairs: Vec<MatchedPair>,
    /// `α′_k`; the linear factors are `θ + α′_k − 1`.
    pub factors: Vec<GaussianRational>,
    pub reduced_alpha: Vec<GaussianRational>,
    pub reduced_beta: Vec<GaussianRational>,
}

impl Factorization {
    pub fn linear_factors(&self) -> Vec<ThetaOperator> {
        let one = GaussianRational::one();
        self.factors.iter().map(|a| ThetaOperator::theta_plus(&(a - &one))).collect()
    }

    pub fn reduced_operator(&self) -> ThetaOperator {
        hypergeometric_operator(&self.reduced_alpha, &self.reduced_beta)
    }

    /// `∏(θ+α′_k−1)·D(reduced)`.
    pub fn product(&self) -> ThetaOperator {
        op_mul(&op_product(&self.linear_factors()), &self.reduced_operator())
    }
}

/// Greedy matching over `E₀ ∪ E₊`: repeatedly take the unused pair with the
/// smallest `α_i − β_j`, ties broken by `(i, j)`.
pub fn greedy_matching(p: &HGParams) -> Vec<MatchedPair> {
    let mut used_i = vec![false; p.n()];
    let mut used_j = vec![false; p.n()];
    let mut out = Vec::new();
    loop {
        let mut best: Option<MatchedPair> = None;
        for (i, a) in p.alpha.iter().enumerate().filter(|(i, _)| !used_i[*i]) {
            for (j, b) in p.beta.iter().enumerate().filter(|(j, _)| !used_j[*j]) {
                let Some(m) = (a - b).to_i64() else { continue };
                if m < 0 || best.as_ref().is_some_and(|x| x.steps <= m as u64) {
                    continue;
                }
                best = Some(MatchedPair { alpha_index: i, beta_index: j, steps: m as u64 });
            }
        }
        let Some(pair) = best else { return out };
        used_i[pair.alpha_index] = true;
        used_j[pair.beta_index] = true;
        out.push(pair);
    }
}

/// Factors out one linear piece per matched pair.
///
/// Each pair `(i, j)` with `α_i − β_j = m` is brought to `α_i = β_j` by `m`
/// lowering steps `D(α;β)(θ+α_i−1) = (θ+α_i−1)D(α_i−1;β)`, after which
/// `(θ+β_j−1)` splits off on the left. Every step and the final product are
/// checked by exact expansion before returning.
pub fn factor_reducible(p: &HGParams) -> Result<Factorization> {
    let pairs = greedy_matching(p);
    if pairs.is_empty() {
        return Err(Error::NoAdmissibleMatching);
    }
    let mut current = p.clone();
    for pair in &pairs {
        for _ in 0..pair.steps {
            let kind = ContiguityKind::AlphaStep { j: pair.alpha_index };
            if !contiguity_check(&kind, &current)? {
                return Err(Error::InvalidOperator("lowering step failed to verify".into()));
            }
            let lowered = &current.alpha[pair.alpha_index] - &GaussianRational::one();
            current = current.with_alpha(pair.alpha_index, lowered);
        }
    }
    let keep_i = |i: &usize| pairs.iter().all(|x| x.alpha_index != *i);
    let keep_j = |j: &usize| pairs.iter().all(|x| x.beta_index != *j);
    let out = Factorization {
        factors: pairs.iter().map(|x| p.beta[x.beta_index].clone()).collect(),
        reduced_alpha: (0..p.n()).filter(keep_i).map(|i| p.alpha[i].clone()).collect(),
        reduced_beta: (0..p.n()).filter(keep_j).map(|j| p.beta[j].clone()).collect(),
        pairs,
    };
    if build_d(&current) != out.product() {
        return Err(Error::InvalidOperator("factored product failed to verify".into()));
    }
    Ok(out)
}
