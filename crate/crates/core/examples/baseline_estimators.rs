//! The running minimum and the two offset estimators over one NSGA-II run.

use eie::biasgen::BiasedProblem;
use eie::hosts::{drp_beta, Estimator, EstimatorConfig, EstimatorKind, HostConfig, HostKind};
use eie::moo::{random_source, Evaluator};
use eie::Problem;

fn main() {
    let problem = BiasedProblem::named("mop2").unwrap();
    let fe_max = 20_000;
    let mut rng = random_source(11);
    let mut eval = Evaluator::new(&problem, fe_max);
    let host_cfg = HostConfig::new(HostKind::Nsga2, 2);
    let init: Vec<_> = (0..host_cfg.population_size)
        .map(|_| eval.evaluate(problem.bounds().sample_uniform(&mut rng)).unwrap().unwrap())
        .collect();

    let make = |k| Estimator::new(EstimatorConfig::new(k), 2, fe_max);
    let (mut ut, mut drp) = (make(EstimatorKind::Ut), make(EstimatorKind::Drp));
    ut.observe(&init, eval.used());
    let mut host = host_cfg.build(init, problem.bounds().clone());
    println!("ideal {:?}", problem.ideal().unwrap());
    println!("{:>6} {:>22} {:>22} {:>7} {:>22}", "fe", "running min", "ut", "beta", "drp");
    let mut gen = 0;
    while !eval.exhausted() {
        let before = eval.used();
        host.step(&[], &mut ut, &mut eval, &mut rng).unwrap();
        drp.observe(host.population(), eval.used());
        gen += 1;
        if gen % 40 == 0 || eval.exhausted() {
            let pop = host.population();
            println!(
                "{:>6} {:>22} {:>22} {:>7.4} {:>22}",
                eval.used(),
                format!("{:.4?}", ut.running_min()),
                format!("{:.4?}", ut.reference(pop)),
                drp_beta(eval.used(), fe_max, 1e-3),
                format!("{:.4?}", drp.reference(pop))
            );
        }
        if eval.used() == before {
            break;
        }
    }
}
