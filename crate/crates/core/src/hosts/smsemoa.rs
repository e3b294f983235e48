//! Steady-state hypervolume-based host.

use rand::Rng;

use super::variation::{de_pm_offspring, pick_parents, VariationParams};
use super::Host;
use crate::hosts::estimator::Estimator;
use crate::hosts::moead::normalize;
use crate::metrics::hv_contributions;
use crate::moo::{componentwise_max, non_dominated_sort, BoxBounds, Evaluator, RandomSource, Solution};
use crate::Result;

/// Index of the member to discard: the smallest exclusive hypervolume
/// contribution within the worst front, measured against `reference`.
/// Ties go to the later member.
pub fn smsemoa_select<V: AsRef<[f64]>>(points: &[V], reference: &[f64]) -> usize {
    assert!(!points.is_empty(), "nothing to remove");
    let fronts = non_dominated_sort(points);
    let worst = fronts.last().expect("at least one front");
    if worst.len() == 1 {
        return worst[0];
    }
    let members: Vec<&[f64]> = worst.iter().map(|&i| points[i].as_ref()).collect();
    let contrib = hv_contributions(&members, reference);
    let mut pick = 0;
    for k in 1..worst.len() {
        if contrib[k] <= contrib[pick] {
            pick = k;
        }
    }
    worst[pick]
}

pub struct SmsEmoa {
    pop: Vec<Solution>,
    size: usize,
    bounds: BoxBounds,
    variation: VariationParams,
}

impl SmsEmoa {
    pub fn new(pop: Vec<Solution>, bounds: BoxBounds, variation: VariationParams) -> Self {
        let size = pop.len();
        SmsEmoa { pop, size, bounds, variation }
    }

    /// Drops members until the population is back to its nominal size.
    /// Objectives are scaled by the estimated ideal point and the
    /// population maximum; the reference point lies one unit beyond the
    /// worst front's maximum.
    fn reduce(&mut self, est: &Estimator) {
        while self.pop.len() > self.size {
            let z = est.reference(&self.pop);
            let top = componentwise_max(&self.pop.iter().map(|s| s.f.as_slice()).collect::<Vec<_>>());
            let scaled: Vec<Vec<f64>> = self.pop.iter().map(|s| normalize(&s.f, &z, &top)).collect();
            let fronts = non_dominated_sort(&scaled);
            let worst = fronts.last().expect("non-empty population");
            let reference: Vec<f64> = (0..z.len())
                .map(|j| worst.iter().map(|&i| scaled[i][j]).fold(f64::NEG_INFINITY, f64::max) + 1.0)
                .collect();
            let out = smsemoa_select(&scaled, &reference);
            self.pop.swap_remove(out);
        }
    }
}

impl Host for SmsEmoa {
    fn name(&self) -> &'static str {
        "smsemoa"
    }

    fn population(&self) -> &[Solution] {
        &self.pop
    }

    fn step(
        &mut self,
        o1: &[Solution],
        est: &mut Estimator,
        eval: &mut Evaluator<'_>,
        rng: &mut RandomSource,
    ) -> Result<Vec<Solution>> {
        self.pop.extend_from_slice(o1);
        self.reduce(est);
        let mut children = Vec::with_capacity(self.size);
        for _ in 0..self.size {
            let all: Vec<usize> = (0..self.pop.len()).collect();
            let base = rng.random_range(0..self.pop.len());
            let idx = pick_parents(&all, Some(base), rng);
            let parents = [self.pop[idx[0]].x.as_slice(), self.pop[idx[1]].x.as_slice(), self.pop[idx[2]].x.as_slice()];
            let child = de_pm_offspring(parents, &self.variation, &self.bounds, rng);
            let Some(s) = eval.evaluate(child)? else { break };
            est.observe(std::slice::from_ref(&s), eval.used());
            self.pop.push(s.clone());
            children.push(s);
            self.reduce(est);
        }
        Ok(children)
    }
}
