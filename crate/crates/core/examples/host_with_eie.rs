//! Drives MOEA/D by hand with the estimation component attached, printing
//! the estimate and the budget split as the run goes.

use eie::biasgen::BiasedProblem;
use eie::eie::{EieConfig, EieMode, EieState};
use eie::hosts::{Estimator, EstimatorConfig, EstimatorKind, HostConfig, HostKind};
use eie::metrics::{e_metric, ErrorForm};
use eie::moo::{random_source, Evaluator};
use eie::Problem;

fn main() {
    let problem = BiasedProblem::named("mop6").unwrap();
    let (ideal, nadir) = (problem.ideal().unwrap(), problem.nadir().unwrap());
    let fe_max = 50_000;
    let m = problem.num_objectives();
    let mut rng = random_source(1);
    let mut eval = Evaluator::new(&problem, fe_max);

    let host_cfg = HostConfig::new(HostKind::Moead, m);
    let init: Vec<_> = (0..host_cfg.effective_population(m))
        .map(|_| eval.evaluate(problem.bounds().sample_uniform(&mut rng)).unwrap().unwrap())
        .collect();
    let mut est = Estimator::new(EstimatorConfig::new(EstimatorKind::Eie), m, fe_max);
    est.observe(&init, eval.used());
    let mut eie = EieState::new(&init, problem.bounds().clone(), EieConfig::new(m, EieMode::Ews)).unwrap();
    let mut host = host_cfg.build(init, problem.bounds().clone());

    let mut next_print = 5_000;
    while !eval.exhausted() {
        let o1 = eie.produce_offspring(&mut eval, &mut rng).unwrap();
        est.observe(&o1, eval.used());
        let o2 = host.step(&o1, &mut est, &mut eval, &mut rng).unwrap();
        eie.update(host.population(), &o1, &o2).unwrap();
        if eval.used() >= next_print || eval.exhausted() {
            next_print += 5_000;
            let z = est.reference(host.population());
            let lambdas: Vec<usize> = eie.procedures().iter().map(|p| p.lambda()).collect();
            println!(
                "fe {:>6}  E {:.3e}  eie share {:.2}  lambdas {:?}  restarts {:?}",
                eval.used(),
                e_metric(&z, &ideal, &nadir, ErrorForm::Squared),
                eie.evaluations_used() as f64 / eval.used() as f64,
                lambdas,
                eie.restarts()
            );
        }
    }
}
