use eie::metrics::{hv_contributions, hv_exact, hv_monte_carlo, hv_normalized};
use eie::moo::random_source;

fn main() {
    let front = vec![vec![0.1, 0.9], vec![0.4, 0.5], vec![0.8, 0.2]];
    let r = [1.0, 1.0];
    println!("exact          {:.6}", hv_exact(&front, &r));
    println!("contributions  {:.6?}", hv_contributions(&front, &r));
    let (mc, se) = hv_monte_carlo(&front, &r, 1_000_000, &mut random_source(1));
    println!("monte carlo    {mc:.6} +- {se:.6}");

    let tri = vec![vec![0.0, 0.5, 0.5], vec![0.5, 0.0, 0.5], vec![0.5, 0.5, 0.0], vec![0.3, 0.3, 0.3]];
    let r3 = [1.0; 3];
    let (mc, se) = hv_monte_carlo(&tri, &r3, 1_000_000, &mut random_source(2));
    println!("3d exact {:.6}  monte carlo {mc:.6} +- {se:.6}", hv_exact(&tri, &r3));

    // normalized by ideal 0 and nadir 1, reference 1.1: a perfect linear front
    let lin: Vec<Vec<f64>> = (0..=100).map(|k| vec![k as f64 / 100.0, 1.0 - k as f64 / 100.0]).collect();
    println!("normalized linear front {:.4}", hv_normalized(&lin, &[0.0, 0.0], &[1.0, 1.0]));
}
