//! Seeded sweeps over many random instances, run on the rayon pool or
//! sequentially.

use rand::Rng;
use serde::Serialize;

use crate::error::Result;
use crate::hypergeometric::{contiguity_check, HGParams};
use crate::rigidity::{common_frame, levelt_normal_form};
use crate::sample::{contiguity_kinds, conjugated_levelt_tuple, gaussian_params, instance_rng};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    #[default]
    Parallel,
}

/// `f(0), …, f(count − 1)` in index order.
pub fn map_indices<T, F>(exec: Execution, count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..count).into_par_iter().map(f).collect()
        }
        _ => (0..count).map(f).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContiguityOutcome {
    pub index: usize,
    pub params: HGParams,
    /// Identity name and whether it held.
    pub checks: Vec<(&'static str, bool)>,
}

impl ContiguityOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.1)
    }
}

/// Every contiguity identity on `count` random Gaussian-rational parameter
/// sets with orders drawn from `min_n..=max_n`.
pub fn contiguity_sweep(
    exec: Execution,
    seed: u64,
    count: usize,
    min_n: usize,
    max_n: usize,
) -> Result<Vec<ContiguityOutcome>> {
    map_indices(exec, count, |index| {
        let mut rng = instance_rng(seed, index);
        let n = rng.random_range(min_n..=max_n);
        let params = gaussian_params(&mut rng, n);
        let checks = contiguity_kinds(&mut rng, &params)
            .iter()
            .map(|k| Ok((k.name(), contiguity_check(k, &params)?)))
            .collect::<Result<_>>()?;
        Ok(ContiguityOutcome { index, params, checks })
    })
    .into_iter()
    .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LeveltOutcome {
    pub index: usize,
    pub n: usize,
    pub p: usize,
    pub recovered: bool,
}

/// Conjugates random companion tuples and checks that the normal form
/// gives back the companions exactly.
pub fn levelt_sweep(exec: Execution, seed: u64, count: usize, max_n: usize, max_p: usize) -> Vec<LeveltOutcome> {
    map_indices(exec, count, |index| {
        let mut rng = instance_rng(seed, index);
        let n = rng.random_range(2..=max_n);
        let p = rng.random_range(2..=max_p);
        let (canon, moved) = conjugated_levelt_tuple(&mut rng, p, n);
        let recovered = common_frame(&moved)
            .and_then(|f| levelt_normal_form(&moved, &f))
            .is_ok_and(|form| form.canon == canon);
        LeveltOutcome { index, n, p, recovered }
    })
}
