//! The position remapping and how it skews uniform samples towards the
//! bias point.

use eie::biasgen::{remap, BiasedProblem};
use eie::moo::random_source;
use rand::Rng;

fn main() {
    let (chat, gamma) = (0.25, 0.1);
    println!("remap with chat = {chat}, gamma = {gamma}");
    for sigma in [0.0, 0.05, 0.125, 0.2, 0.25, 0.4, 0.625, 0.8, 1.0] {
        println!("  sigma {sigma:>5.3} -> {:.6}", remap(sigma, chat, gamma));
    }

    // histogram of the first simplex coordinate for uniform decision vectors
    let problem = BiasedProblem::named("mop1").unwrap();
    let params = problem.params();
    let mut rng = random_source(3);
    let mut bins = [0usize; 10];
    for _ in 0..20_000 {
        let x_pos: Vec<f64> = (0..params.s).map(|_| rng.random::<f64>()).collect();
        let (_, y) = params.position_value(&x_pos);
        bins[((y[0] * 10.0) as usize).min(9)] += 1;
    }
    println!("\nmop1, y1 over 20000 uniform samples (bias point {:?})", params.c_pos);
    for (k, count) in bins.iter().enumerate() {
        println!("  [{:.1}, {:.1}) {:>6} {}", k as f64 / 10.0, (k + 1) as f64 / 10.0, count, "#".repeat(count / 200));
    }
}
