//! Analytic Pareto set and Pareto front samplers.

use rand::Rng;

use super::{position, GeneratorParams};
use crate::moo::{DecisionVector, ObjectiveVector};

/// How to place points on the unit simplex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrontSampling {
    /// Structured grid. Two objectives: `count` evenly spaced points. Three
    /// objectives: the largest simplex lattice with at most `count` points.
    Grid(usize),
    /// Uniform (Dirichlet(1)) random points.
    Random(usize),
}

impl FrontSampling {
    /// Default grid density: 1000 points for two objectives, 5151 for three.
    pub fn default_grid(m: usize) -> Self {
        if m == 2 {
            FrontSampling::Grid(1000)
        } else {
            FrontSampling::Grid(5151)
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Simplex lattice with `divisions` steps per axis.
pub fn simplex_lattice(m: usize, divisions: usize) -> Vec<Vec<f64>> {
    fn rec(m: usize, left: usize, h: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<f64>>) {
        if prefix.len() == m - 1 {
            prefix.push(left);
            out.push(prefix.iter().map(|&k| k as f64 / h as f64).collect());
            prefix.pop();
            return;
        }
        for k in 0..=left {
            prefix.push(k);
            rec(m, left - k, h, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(binomial(divisions + m - 1, m - 1));
    if divisions == 0 {
        let mut v = vec![0.0; m];
        v[0] = 1.0;
        out.push(v);
        return out;
    }
    rec(m, divisions, divisions, &mut Vec::with_capacity(m), &mut out);
    out
}

fn simplex_points<R: Rng + ?Sized>(m: usize, how: FrontSampling, rng: &mut R) -> Vec<Vec<f64>> {
    match how {
        FrontSampling::Grid(count) => {
            let count = count.max(1);
            if m == 2 {
                if count == 1 {
                    return vec![vec![0.5, 0.5]];
                }
                (0..count)
                    .map(|k| {
                        let t = k as f64 / (count - 1) as f64;
                        vec![t, 1.0 - t]
                    })
                    .collect()
            } else {
                let mut h = 0;
                while binomial(h + 1 + m - 1, m - 1) <= count {
                    h += 1;
                }
                simplex_lattice(m, h)
            }
        }
        FrontSampling::Random(count) => (0..count.max(1))
            .map(|_| {
                let e: Vec<f64> = (0..m).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
                let total: f64 = e.iter().sum();
                e.into_iter().map(|v| v / total).collect()
            })
            .collect(),
    }
}

/// Points of the analytic front `f_i = w_i y_i^{p_i}` (or `w_i (1 - y_i^{p_i})`
/// for inverted instances) over simplex points `y`.
pub fn sample_pareto_front<R: Rng + ?Sized>(
    params: &GeneratorParams,
    how: FrontSampling,
    rng: &mut R,
) -> Vec<ObjectiveVector> {
    simplex_points(params.m, how, rng)
        .into_iter()
        .map(|y| {
            position::shape(&y, &params.p, params.inverted)
                .into_iter()
                .zip(&params.w)
                .map(|(h, w)| w * h)
                .collect()
        })
        .collect()
}

/// Uniform position variables completed with their Pareto-optimal distance
/// variables.
pub fn sample_pareto_set<R: Rng + ?Sized>(params: &GeneratorParams, count: usize, rng: &mut R) -> Vec<DecisionVector> {
    (0..count)
        .map(|_| {
            let x_pos: Vec<f64> = (0..params.s).map(|_| rng.random::<f64>()).collect();
            params.pareto_set_point(&x_pos)
        })
        .collect()
}
