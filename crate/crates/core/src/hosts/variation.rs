//! Differential evolution crossover followed by polynomial mutation.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::moo::{BoxBounds, DecisionVector};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VariationParams {
    pub de_f: f64,
    pub de_cr: f64,
    pub pm_index: f64,
    /// Per-variable mutation probability; `None` means `1 / n`.
    pub pm_prob: Option<f64>,
}

impl Default for VariationParams {
    fn default() -> Self {
        VariationParams { de_f: 0.5, de_cr: 0.9, pm_index: 50.0, pm_prob: None }
    }
}

/// `base + F (r1 - r2)` on each variable with probability `CR`, `base`
/// elsewhere.
pub fn de_crossover<R: Rng + ?Sized>(base: &[f64], r1: &[f64], r2: &[f64], f: f64, cr: f64, rng: &mut R) -> DecisionVector {
    base.iter()
        .zip(r1.iter().zip(r2))
        .map(|(b, (a, c))| if rng.random::<f64>() < cr { b + f * (a - c) } else { *b })
        .collect()
}

/// Bounded polynomial mutation in place. `x` must lie inside `bounds`.
pub fn polynomial_mutation<R: Rng + ?Sized>(x: &mut [f64], bounds: &BoxBounds, eta: f64, prob: f64, rng: &mut R) {
    let power = 1.0 / (eta + 1.0);
    for (j, v) in x.iter_mut().enumerate() {
        if rng.random::<f64>() >= prob {
            continue;
        }
        let (lo, hi) = (bounds.lower()[j], bounds.upper()[j]);
        let width = hi - lo;
        let d1 = (*v - lo) / width;
        let d2 = (hi - *v) / width;
        let r = rng.random::<f64>();
        let dq = if r < 0.5 {
            let val = 2.0 * r + (1.0 - 2.0 * r) * (1.0 - d1).powf(eta + 1.0);
            val.powf(power) - 1.0
        } else {
            let val = 2.0 * (1.0 - r) + 2.0 * (r - 0.5) * (1.0 - d2).powf(eta + 1.0);
            1.0 - val.powf(power)
        };
        *v = (*v + dq * width).clamp(lo, hi);
    }
}

/// One child: DE on `parents = [base, r1, r2]`, clamp, polynomial mutation.
pub fn de_pm_offspring<R: Rng + ?Sized>(
    parents: [&[f64]; 3],
    params: &VariationParams,
    bounds: &BoxBounds,
    rng: &mut R,
) -> DecisionVector {
    let mut child = de_crossover(parents[0], parents[1], parents[2], params.de_f, params.de_cr, rng);
    bounds.clamp_in_place(&mut child);
    let prob = params.pm_prob.unwrap_or(1.0 / child.len() as f64);
    polynomial_mutation(&mut child, bounds, params.pm_index, prob, rng);
    child
}

/// Three distinct indices from `pool`, the first one fixed to `base` when
/// given. Falls back to repeats when the pool is too small.
pub fn pick_parents<R: Rng + ?Sized>(pool: &[usize], base: Option<usize>, rng: &mut R) -> [usize; 3] {
    let first = base.unwrap_or_else(|| pool[rng.random_range(0..pool.len())]);
    let mut chosen = [first, first, first];
    for slot in 1..3 {
        for _ in 0..32 {
            let c = pool[rng.random_range(0..pool.len())];
            if !chosen[..slot].contains(&c) {
                chosen[slot] = c;
                break;
            }
            chosen[slot] = c;
        }
    }
    chosen
}
