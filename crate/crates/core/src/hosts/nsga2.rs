//! Dominance-based host: non-dominated sorting with crowding distance.

use rand::Rng;

use super::variation::{de_pm_offspring, VariationParams};
use super::Host;
use crate::hosts::estimator::Estimator;
use crate::moo::{non_dominated_sort, BoxBounds, Evaluator, RandomSource, Solution};
use crate::Result;

/// Crowding distance of each member of one front; boundary members get
/// infinity.
pub fn crowding_distance<V: AsRef<[f64]>>(front: &[V]) -> Vec<f64> {
    let k = front.len();
    let mut dist = vec![0.0; k];
    if k == 0 {
        return dist;
    }
    let m = front[0].as_ref().len();
    for j in 0..m {
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by(|&a, &b| front[a].as_ref()[j].total_cmp(&front[b].as_ref()[j]));
        let lo = front[order[0]].as_ref()[j];
        let hi = front[order[k - 1]].as_ref()[j];
        dist[order[0]] = f64::INFINITY;
        dist[order[k - 1]] = f64::INFINITY;
        if hi - lo <= 0.0 {
            continue;
        }
        for w in 1..k.saturating_sub(1) {
            let gap = front[order[w + 1]].as_ref()[j] - front[order[w - 1]].as_ref()[j];
            dist[order[w]] += gap / (hi - lo);
        }
    }
    dist
}

/// Indices of the `n` survivors of `points`: whole fronts in order, the
/// last one truncated by descending crowding distance.
pub fn nsga2_select<V: AsRef<[f64]>>(points: &[V], n: usize) -> Vec<usize> {
    assert!(points.len() >= n, "cannot select {n} of {} points", points.len());
    let mut kept = Vec::with_capacity(n);
    for front in non_dominated_sort(points) {
        if kept.len() + front.len() <= n {
            kept.extend(front);
            if kept.len() == n {
                break;
            }
            continue;
        }
        let members: Vec<&[f64]> = front.iter().map(|&i| points[i].as_ref()).collect();
        let dist = crowding_distance(&members);
        let mut order: Vec<usize> = (0..front.len()).collect();
        order.sort_by(|&a, &b| dist[b].total_cmp(&dist[a]));
        kept.extend(order.into_iter().take(n - kept.len()).map(|k| front[k]));
        break;
    }
    kept
}

/// Front rank and crowding distance of every member.
pub fn rank_and_crowding<V: AsRef<[f64]>>(points: &[V]) -> (Vec<usize>, Vec<f64>) {
    let mut rank = vec![0; points.len()];
    let mut crowd = vec![0.0; points.len()];
    for (r, front) in non_dominated_sort(points).into_iter().enumerate() {
        let members: Vec<&[f64]> = front.iter().map(|&i| points[i].as_ref()).collect();
        for (k, d) in front.iter().zip(crowding_distance(&members)) {
            rank[*k] = r;
            crowd[*k] = d;
        }
    }
    (rank, crowd)
}

pub struct Nsga2 {
    pop: Vec<Solution>,
    rank: Vec<usize>,
    crowd: Vec<f64>,
    bounds: BoxBounds,
    variation: VariationParams,
}

impl Nsga2 {
    pub fn new(pop: Vec<Solution>, bounds: BoxBounds, variation: VariationParams) -> Self {
        let (rank, crowd) = rank_and_crowding(&pop.iter().map(|s| s.f.as_slice()).collect::<Vec<_>>());
        Nsga2 { pop, rank, crowd, bounds, variation }
    }

    fn tournament(&self, rng: &mut RandomSource) -> usize {
        let a = rng.random_range(0..self.pop.len());
        let b = rng.random_range(0..self.pop.len());
        let key = |i: usize| (self.rank[i], -self.crowd[i]);
        if key(a) <= key(b) { a } else { b }
    }
}

impl Host for Nsga2 {
    fn name(&self) -> &'static str {
        "nsga2"
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
        let mut children = Vec::with_capacity(n);
        for _ in 0..n {
            let idx = [self.tournament(rng), self.tournament(rng), self.tournament(rng)];
            let parents = [self.pop[idx[0]].x.as_slice(), self.pop[idx[1]].x.as_slice(), self.pop[idx[2]].x.as_slice()];
            let child = de_pm_offspring(parents, &self.variation, &self.bounds, rng);
            match eval.evaluate(child)? {
                Some(s) => children.push(s),
                None => break,
            }
        }
        est.observe(&children, eval.used());
        let mut union: Vec<Solution> = std::mem::take(&mut self.pop);
        union.extend_from_slice(o1);
        union.extend_from_slice(&children);
        let keep = nsga2_select(&union.iter().map(|s| s.f.as_slice()).collect::<Vec<_>>(), n);
        self.pop = keep.into_iter().map(|i| union[i].clone()).collect();
        let (rank, crowd) = rank_and_crowding(&self.pop.iter().map(|s| s.f.as_slice()).collect::<Vec<_>>());
        self.rank = rank;
        self.crowd = crowd;
        Ok(children)
    }
}
