//! Seeded random deletion specs. Each (seed, system, trial) owns an
//! independent ChaCha stream, so results do not depend on scheduling.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::expect_nodeless;
use crate::algebra::{is_half_odd_integer, is_integer, ratio, rational_to_f64, Rational};
use crate::deform::{bar_set, ka_condition, DeletionSpec, IndexSet};
use crate::error::{Error, Result};
use crate::systems::{ParamVec, SystemId};

/// Shape of the sampled deletions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplerConfig {
    pub max_m: usize,
    pub max_entry: u32,
    /// N is drawn from max(D)..=max(D)+extra_n.
    pub extra_n: u32,
    pub max_n: u32,
}

impl SamplerConfig {
    /// The exact identity suite: M ≤ 4, entries ≤ 7, N ≤ max(D)+3.
    pub const EXACT: Self = Self { max_m: 4, max_entry: 7, extra_n: 3, max_n: 10 };
    /// Smaller deletions for the floating-point checks.
    pub const NUMERIC: Self = Self { max_m: 2, max_entry: 4, extra_n: 2, max_n: 6 };
}

pub fn trial_rng(seed: u64, id: SystemId, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((id as u64) << 40) | trial);
    rng
}

/// Uniform rational in the open interval (lo, hi) with denominator ≤ 16.
fn draw(rng: &mut impl Rng, lo: f64, hi: f64) -> Rational {
    loop {
        let q = rng.gen_range(1..=16i64);
        let a = (lo * q as f64).floor() as i64 + 1;
        let b = (hi * q as f64).ceil() as i64 - 1;
        if a <= b {
            return ratio(rng.gen_range(a..=b), q);
        }
    }
}

/// Sampling interval of component `k`, given the components drawn so far.
fn range(id: SystemId, k: usize, prev: &[f64]) -> (f64, f64) {
    use SystemId::*;
    match (id, k) {
        (L | C, _) => (0.5, 8.0),
        (J, _) => (1.5, 9.0),
        (K, 0) => (1.5, 9.0),
        (K, _) => (0.0, 10.0),
        (M | Hst | S, 0) => (0.0, 10.0),
        (M | Hst, _) => (0.0, 4.0),
        (RM, 0) => (1.0, 10.0),
        (RM, _) => (0.0, prev[0] * prev[0]),
        (Kh, 0) => (0.5, 5.0),
        (Kh, _) => (prev[0] * prev[0], prev[0] * prev[0] + 30.0),
        (HDPT, 0) => (0.5, 6.0),
        (HDPT, _) => (prev[0], prev[0] + 12.0),
        _ => unreachable!("no parameter {k} for {id}"),
    }
}

/// Generic parameters in the validity range. `lift` raises every
/// component with a positive shift direction by lift·δ, which keeps
/// λ − lift·δ valid for the numeric checks.
pub fn sample_params(id: SystemId, rng: &mut impl Rng, lift: i64) -> ParamVec {
    let desc = id.descriptor();
    loop {
        let mut vals: Vec<Rational> = Vec::with_capacity(desc.delta.len());
        let mut prev = Vec::with_capacity(desc.delta.len());
        for (k, &d) in desc.delta.iter().enumerate() {
            let (lo, hi) = range(id, k, &prev);
            let off = (lift * d.max(0)) as f64;
            let v = draw(rng, lo + off, hi + off);
            prev.push(rational_to_f64(&v));
            vals.push(v);
        }
        let generic = desc
            .param_names
            .iter()
            .zip(&vals)
            .filter(|(n, _)| **n == "g" || **n == "h")
            .map(|(_, v)| v.clone())
            .chain(combination(id, &vals))
            .all(|v| !is_integer(&v) && !is_half_odd_integer(&v));
        if generic && id.param_range(&vals) {
            return ParamVec::new(id, vals).expect("names match");
        }
    }
}

/// Parameter combinations whose (half-)integrality collapses degrees.
fn combination(id: SystemId, vals: &[Rational]) -> Option<Rational> {
    match id {
        SystemId::J => Some(&vals[0] + &vals[1]),
        SystemId::HDPT => Some(&vals[1] - &vals[0]),
        _ => None,
    }
}

fn draw_set(rng: &mut impl Rng, cfg: &SamplerConfig) -> (IndexSet, i64) {
    let top = cfg.max_entry.min(cfg.max_n);
    let m = rng.gen_range(1..=cfg.max_m.min(top as usize + 1));
    let mut pool: Vec<u32> = (0..=top).collect();
    let mut d = Vec::with_capacity(m);
    for _ in 0..m {
        d.push(pool.swap_remove(rng.gen_range(0..pool.len())));
    }
    let max = *d.iter().max().expect("m ≥ 1");
    let hi = (max + cfg.extra_n).min(cfg.max_n.max(max));
    let n = rng.gen_range(max..=hi) as i64;
    (IndexSet::new(d).expect("distinct"), n)
}

/// A random spec for the exact identity suite.
pub fn sample_exact(id: SystemId, seed: u64, trial: u64, cfg: &SamplerConfig) -> Result<DeletionSpec> {
    if cfg.max_m == 0 {
        return Err(Error::InvalidParams("max M must be at least 1".into()));
    }
    let mut rng = trial_rng(seed, id, trial);
    let (d, n) = draw_set(&mut rng, cfg);
    let lambda = sample_params(id, &mut rng, 0);
    DeletionSpec::new(id, lambda, d, n)
}

/// A random nodeless spec for the numeric checks: ka_condition(D̄) holds,
/// every index is in pseudo_range and λ̄ is valid.
pub fn sample_nodeless(id: SystemId, seed: u64, trial: u64, cfg: &SamplerConfig) -> Result<DeletionSpec> {
    if cfg.max_m == 0 {
        return Err(Error::InvalidParams("max M must be at least 1".into()));
    }
    let mut rng = trial_rng(seed, id, trial);
    for _ in 0..10_000 {
        let (d, n) = draw_set(&mut rng, cfg);
        if !ka_condition(bar_set(&d, n)?.as_slice()) {
            continue;
        }
        let lambda = sample_params(id, &mut rng, n + 1);
        let spec = DeletionSpec::new(id, lambda, d, n)?;
        if expect_nodeless(&spec) {
            return Ok(spec);
        }
    }
    Err(Error::InvalidParams(format!("no nodeless configuration found for {id}")))
}
