//! One trial: a host, an estimator and optionally the estimation
//! component, sharing one evaluation budget.

use std::hash::{DefaultHasher, Hash, Hasher};

use serde::{Deserialize, Serialize};

use super::config::TrialConfig;
use crate::eie::{EieConfig, EieMode, EieState};
use crate::hosts::{Estimator, EstimatorKind};
use crate::metrics::{e_metric, hv_normalized};
use crate::moo::{random_source, Evaluator, ObjectiveVector, Problem, Solution};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Snapshot {
    pub fe: usize,
    pub e: f64,
    pub hv: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub problem: String,
    pub host: String,
    pub estimator: String,
    pub seed: u64,
    pub fe_max: usize,
    pub config_digest: String,
    pub fe_used: usize,
    pub eie_evaluations: usize,
    pub e: f64,
    pub hv: f64,
    pub eie_fe_fraction: f64,
    pub estimate: ObjectiveVector,
    pub population: Vec<Solution>,
    pub trajectory: Vec<Snapshot>,
}

impl RunRecord {
    pub fn column(&self) -> String {
        format!("{}+{}", self.host, self.estimator)
    }
}

/// Hex digest of the configuration, stable for a given build.
pub fn config_digest(config: &TrialConfig) -> String {
    let json = serde_json::to_string(config).expect("configurations serialize");
    let mut h = DefaultHasher::new();
    json.hash(&mut h);
    format!("{:016x}", h.finish())
}

struct Tracker<'a> {
    ideal: &'a [f64],
    nadir: &'a [f64],
    config: &'a TrialConfig,
    next: usize,
    trajectory: Vec<Snapshot>,
}

impl Tracker<'_> {
    fn metrics(&self, estimate: &[f64], pop: &[Solution]) -> (f64, f64) {
        let e = e_metric(estimate, self.ideal, self.nadir, self.config.error_form);
        let fs: Vec<&[f64]> = pop.iter().map(|s| s.f.as_slice()).collect();
        (e, hv_normalized(&fs, self.ideal, self.nadir))
    }

    fn record(&mut self, fe: usize, estimate: &[f64], pop: &[Solution], force: bool) {
        if fe < self.next && !force {
            return;
        }
        if self.trajectory.last().is_some_and(|s| s.fe == fe) {
            return;
        }
        let (e, hv) = self.metrics(estimate, pop);
        self.trajectory.push(Snapshot { fe, e, hv });
        let every = self.config.snapshot_every;
        self.next = (fe / every + 1) * every;
    }
}

/// Runs one trial to budget exhaustion. The same configuration and seed
/// always give the same record.
pub fn run_trial(config: &TrialConfig, seed: u64) -> Result<RunRecord> {
    config.validate()?;
    let problem = config.problem.build()?;
    let m = problem.num_objectives();
    let ideal = problem.ideal().expect("generated problems know their ideal point");
    let nadir = problem.nadir().expect("generated problems know their nadir point");
    let bounds = problem.bounds().clone();
    let mut rng = random_source(seed);
    let mut eval = Evaluator::new(&problem, config.fe_max);

    let n = config.host.effective_population(m);
    let mut init = Vec::with_capacity(n);
    for _ in 0..n {
        let x = bounds.sample_uniform(&mut rng);
        init.push(eval.evaluate(x)?.ok_or_else(|| Error::Config("budget smaller than the population".into()))?);
    }
    let mut est = Estimator::new(config.estimator, m, config.fe_max);
    est.observe(&init, eval.used());
    let mut eie = if config.estimator.kind.uses_eie() {
        let mode = if config.estimator.kind == EstimatorKind::EieSeparate { EieMode::Separate } else { EieMode::Ews };
        let eie_config = EieConfig { epsilons: vec![config.epsilon; m], ..EieConfig::new(m, mode) };
        Some(EieState::new(&init, bounds.clone(), eie_config)?)
    } else {
        None
    };
    let mut host = config.host.build(init, bounds);
    let mut tracker = Tracker { ideal: &ideal, nadir: &nadir, config, next: config.snapshot_every, trajectory: Vec::new() };

    while !eval.exhausted() {
        let before = eval.used();
        let o1 = match eie.as_mut() {
            Some(state) => state.produce_offspring(&mut eval, &mut rng)?,
            None => Vec::new(),
        };
        est.observe(&o1, eval.used());
        let o2 = host.step(&o1, &mut est, &mut eval, &mut rng)?;
        if let Some(state) = eie.as_mut() {
            state.update(host.population(), &o1, &o2)?;
        }
        let estimate = est.reference(host.population());
        tracker.record(eval.used(), &estimate, host.population(), false);
        if eval.used() == before {
            break;
        }
    }

    let estimate = est.reference(host.population());
    tracker.record(eval.used(), &estimate, host.population(), true);
    let (e, hv) = tracker.metrics(&estimate, host.population());
    let eie_evaluations = eie.as_ref().map_or(0, |s| s.evaluations_used());
    let trajectory = tracker.trajectory;
    Ok(RunRecord {
        problem: config.problem.name(),
        host: config.host.kind.to_string(),
        estimator: config.estimator.kind.to_string(),
        seed,
        fe_max: config.fe_max,
        config_digest: config_digest(config),
        fe_used: eval.used(),
        eie_evaluations,
        e,
        hv,
        eie_fe_fraction: eie_evaluations as f64 / eval.used() as f64,
        estimate,
        population: host.population().to_vec(),
        trajectory,
    })
}
