//! Walks through the preset instances: sizes, analytic ideal and nadir
//! points, and a check that sampled Pareto-set points land on the front.

use eie::biasgen::{sample_pareto_set, BiasedProblem, PresetId};
use eie::moo::random_source;
use eie::Problem;

fn main() {
    let mut rng = random_source(7);
    println!("{:<9} {:>2} {:>3} {:>2}  {:<28} {:<28} {:>10}", "name", "m", "n", "s", "ideal", "nadir", "max g'");
    for id in PresetId::all() {
        let problem = BiasedProblem::from_preset(id);
        let params = problem.params();
        let worst = sample_pareto_set(params, 200, &mut rng)
            .iter()
            .flat_map(|x| params.distance_values(x))
            .fold(0.0f64, f64::max);
        println!(
            "{:<9} {:>2} {:>3} {:>2}  {:<28} {:<28} {:>10.2e}",
            problem.name(),
            params.m,
            params.n,
            params.s,
            format!("{:?}", problem.ideal().unwrap()),
            format!("{:?}", problem.nadir().unwrap()),
            worst
        );
    }

    // one random point of a three-objective instance
    let problem = BiasedProblem::named("mop11").unwrap();
    let x = problem.bounds().sample_uniform(&mut rng);
    println!("\nmop11 at a random x: f = {:.4?}", problem.evaluate(&x));
}
