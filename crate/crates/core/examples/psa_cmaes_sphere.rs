//! CMA-ES with population size adaptation on the sphere.

use eie::cmaes::{CmaProcedure, CmaSettings};
use eie::moo::random_source;
use eie::BoxBounds;

fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

fn run(psa: bool, seed: u64, verbose: bool) -> (usize, usize, usize) {
    let n = 7;
    let bounds = BoxBounds::new(vec![-5.0; n], vec![5.0; n]);
    let settings = CmaSettings { psa, ..CmaSettings::default() };
    let mut cma = CmaProcedure::new(vec![1.0; n], 0.5, bounds, settings);
    let mut rng = random_source(seed);
    let (mut fe, mut max_lambda) = (0, cma.lambda());
    while cma.best_fitness() >= 1e-8 && fe < 20_000 {
        let xs = cma.ask(&mut rng);
        fe += xs.len();
        let scored: Vec<_> = xs.into_iter().map(|x| { let f = sphere(&x); (x, f) }).collect();
        cma.tell(&scored, &[]);
        max_lambda = max_lambda.max(cma.lambda());
        if verbose && cma.generation().is_multiple_of(20) {
            println!("  gen {:>4}  lambda {:>3}  sigma {:.2e}  best {:.2e}", cma.generation(), cma.lambda(), cma.step_size(), cma.best_fitness());
        }
    }
    (fe, cma.lambda_default(), max_lambda)
}

fn main() {
    println!("seed 1 with adaptation:");
    run(true, 1, true);
    for psa in [true, false] {
        let res: Vec<_> = (1..=5).map(|s| run(psa, s, false)).collect();
        let fes: Vec<usize> = res.iter().map(|r| r.0).collect();
        let lmax = res.iter().map(|r| r.2).max().unwrap();
        println!("psa={psa:<5} evaluations to 1e-8: {fes:?}  default lambda {}  largest lambda {lmax}", res[0].1);
    }
}
