//! Decomposition-based host with generational global replacement.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::variation::{de_pm_offspring, pick_parents, VariationParams};
use super::Host;
use crate::biasgen::sampling::simplex_lattice;
use crate::hosts::estimator::Estimator;
use crate::moo::{componentwise_max, BoxBounds, Evaluator, RandomSource, Solution};
use crate::Result;

/// Weights below this are raised to it inside the Tchebycheff function.
const MIN_WEIGHT: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Scalarization {
    #[default]
    Tchebycheff,
    WeightedSum,
}

/// Largest simplex lattice with at most `n` weight vectors.
pub fn weight_vectors(m: usize, n: usize) -> Vec<Vec<f64>> {
    let count = |h: usize| -> usize { (1..m).fold(1usize, |acc, i| acc * (h + i) / i) };
    let mut h = 1;
    while count(h + 1) <= n {
        h += 1;
    }
    simplex_lattice(m, h)
}

/// The `t` nearest weight vectors of each weight vector (itself included),
/// nearest first.
pub fn neighborhoods(weights: &[Vec<f64>], t: usize) -> Vec<Vec<usize>> {
    let dist = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>();
    weights
        .iter()
        .map(|w| {
            let mut order: Vec<usize> = (0..weights.len()).collect();
            order.sort_by(|&a, &b| dist(w, &weights[a]).total_cmp(&dist(w, &weights[b])).then(a.cmp(&b)));
            order.truncate(t.min(weights.len()));
            order
        })
        .collect()
}

/// Scalarized value of a normalized objective vector.
pub fn scalarize(f: &[f64], w: &[f64], kind: Scalarization) -> f64 {
    match kind {
        Scalarization::Tchebycheff => f
            .iter()
            .zip(w)
            .map(|(v, wi)| wi.max(MIN_WEIGHT) * v.abs())
            .fold(0.0, f64::max),
        Scalarization::WeightedSum => f.iter().zip(w).map(|(v, wi)| wi * v).sum(),
    }
}

/// Normalizes `f` by `z_ref` and the componentwise maximum `top`.
pub fn normalize(f: &[f64], z_ref: &[f64], top: &[f64]) -> Vec<f64> {
    f.iter()
        .zip(z_ref.iter().zip(top))
        .map(|(v, (z, t))| {
            let range = t - z;
            let range = if range < 1e-12 { 1.0 } else { range };
            (v - z) / range
        })
        .collect()
}

pub struct Moead {
    pop: Vec<Solution>,
    weights: Vec<Vec<f64>>,
    neighbors: Vec<Vec<usize>>,
    scalarization: Scalarization,
    mating_prob: f64,
    bounds: BoxBounds,
    variation: VariationParams,
}

impl Moead {
    /// `pop` must have one member per weight vector, in matching order.
    pub fn new(
        pop: Vec<Solution>,
        weights: Vec<Vec<f64>>,
        neighborhood_size: usize,
        scalarization: Scalarization,
        bounds: BoxBounds,
        variation: VariationParams,
    ) -> Self {
        assert_eq!(pop.len(), weights.len(), "one member per weight vector");
        let neighbors = neighborhoods(&weights, neighborhood_size.max(2));
        Moead { pop, weights, neighbors, scalarization, mating_prob: 0.9, bounds, variation }
    }

    pub fn weights(&self) -> &[Vec<f64>] {
        &self.weights
    }

    pub fn neighbors(&self) -> &[Vec<usize>] {
        &self.neighbors
    }

    /// Best-of replacement: every candidate goes to the subproblem on which
    /// it scores lowest, and each subproblem keeps the best of its incumbent
    /// and the candidates it received.
    pub fn replace(&mut self, candidates: &[Solution], z_ref: &[f64]) {
        if candidates.is_empty() {
            return;
        }
        let top = componentwise_max(&self.pop.iter().map(|s| s.f.as_slice()).collect::<Vec<_>>());
        let k = self.weights.len();
        let mut best: Vec<(f64, Option<usize>)> = (0..k)
            .map(|j| (scalarize(&normalize(&self.pop[j].f, z_ref, &top), &self.weights[j], self.scalarization), None))
            .collect();
        for (c, cand) in candidates.iter().enumerate() {
            let g = normalize(&cand.f, z_ref, &top);
            let (j, v) = (0..k)
                .map(|j| (j, scalarize(&g, &self.weights[j], self.scalarization)))
                .fold((0, f64::INFINITY), |acc, x| if x.1 < acc.1 { x } else { acc });
            if v < best[j].0 {
                best[j] = (v, Some(c));
            }
        }
        for (j, (_, pick)) in best.into_iter().enumerate() {
            if let Some(c) = pick {
                self.pop[j] = candidates[c].clone();
            }
        }
    }
}

impl Host for Moead {
    fn name(&self) -> &'static str {
        "moead"
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
        let n = self.pop.len();
        let everyone: Vec<usize> = (0..n).collect();
        let mut children = Vec::with_capacity(n);
        for i in 0..n {
            let pool = if rng.random::<f64>() < self.mating_prob { &self.neighbors[i] } else { &everyone };
            let idx = pick_parents(pool, Some(i), rng);
            let parents = [self.pop[idx[0]].x.as_slice(), self.pop[idx[1]].x.as_slice(), self.pop[idx[2]].x.as_slice()];
            let child = de_pm_offspring(parents, &self.variation, &self.bounds, rng);
            match eval.evaluate(child)? {
                Some(s) => children.push(s),
                None => break,
            }
        }
        est.observe(&children, eval.used());
        let z = est.reference(&self.pop);
        let mut candidates = o1.to_vec();
        candidates.extend_from_slice(&children);
        self.replace(&candidates, &z);
        Ok(children)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_weights() {
        let w = weight_vectors(2, 100);
        assert_eq!(w.len(), 100);
        for (k, v) in w.iter().enumerate() {
            assert!((v[0] - k as f64 / 99.0).abs() < 1e-15);
            assert!((v[1] - (1.0 - k as f64 / 99.0)).abs() < 1e-15);
        }
        assert_eq!(weight_vectors(3, 210).len(), 210);
    }

    #[test]
    fn neighborhood_sizes_and_symmetry() {
        let w = weight_vectors(2, 100);
        let nb = neighborhoods(&w, 10);
        for (i, list) in nb.iter().enumerate() {
            assert_eq!(list.len(), 10);
            assert_eq!(list[0], i);
        }
        // interior neighborhoods are symmetric index windows
        assert_eq!(nb[50].iter().copied().min(), Some(45));
    }

    #[test]
    fn tchebycheff_of_reference_is_zero() {
        let z = [0.3, 0.7];
        let g = normalize(&z, &z, &[1.0, 1.0]);
        assert_eq!(scalarize(&g, &[0.5, 0.5], Scalarization::Tchebycheff), 0.0);
        assert_eq!(scalarize(&[0.2, 0.4], &[0.0, 1.0], Scalarization::Tchebycheff), 0.4);
    }

    #[test]
    fn replacement_keeps_the_better_member() {
        let bounds = BoxBounds::new(vec![0.0], vec![1.0]);
        let w = weight_vectors(2, 3);
        let pop: Vec<Solution> = vec![
            Solution::new(vec![0.0], vec![0.0, 1.0]),
            Solution::new(vec![0.0], vec![0.6, 0.6]),
            Solution::new(vec![0.0], vec![1.0, 0.0]),
        ];
        let mut host = Moead::new(pop, w, 2, Scalarization::Tchebycheff, bounds, VariationParams::default());
        host.replace(&[Solution::new(vec![0.5], vec![0.5, 0.5]), Solution::new(vec![0.9], vec![0.9, 0.9])], &[0.0, 0.0]);
        assert_eq!(host.population()[1].f, vec![0.5, 0.5]);
        assert_eq!(host.population()[0].f, vec![0.0, 1.0]);
        assert_eq!(host.population()[2].f, vec![1.0, 0.0]);
    }
}
