//! Extreme weighted sums on a normalized linear front: the brute-force
//! minimizer of each subproblem stays within the tolerance of the ideal.

use eie::eie::{alpha_from_epsilon, error_bound, ews_argmin, EwsSubproblem};
use eie::moo::random_source;
use rand::Rng;

fn simplex_samples(m: usize, count: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = random_source(seed);
    (0..count)
        .map(|_| {
            let e: Vec<f64> = (0..m).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
            let t: f64 = e.iter().sum();
            e.into_iter().map(|v| v / t).collect()
        })
        .collect()
}

fn main() {
    for m in [2, 3] {
        let front = simplex_samples(m, 100_000, m as u64);
        for eps in [0.005, 0.01, 0.05] {
            let alpha = alpha_from_epsilon(eps);
            let bound = error_bound(alpha, 1.0).unwrap();
            let worst = (0..m)
                .map(|i| {
                    let sub = EwsSubproblem::new(i, alpha, m);
                    front[ews_argmin(&front, &sub).unwrap()][i]
                })
                .fold(0.0f64, f64::max);
            println!("m={m} eps={eps:<5} alpha={alpha:.5} bound={bound:.5} worst f_i at minimizer={worst:.2e}");
        }
    }
}
