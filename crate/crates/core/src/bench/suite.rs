//! Parallel execution of every (cell, seed) pair.

use rayon::prelude::*;

use super::config::{SuiteConfig, TrialConfig};
use super::output::Failure;
use super::trial::{run_trial, RunRecord};
use crate::{Error, Result};

/// Environment variable that caps the worker threads.
pub const THREADS_VAR: &str = "EIE_THREADS";

#[derive(Debug, Clone, Default)]
pub struct SuiteResult {
    pub records: Vec<RunRecord>,
    pub failures: Vec<Failure>,
}

fn thread_count() -> Result<Option<usize>> {
    match std::env::var(THREADS_VAR) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Error::Config(format!("{THREADS_VAR} must be a positive integer, got `{v}`"))),
        },
        Err(_) => Ok(None),
    }
}

/// Runs every cell for every seed. Output order is cells then seeds,
/// whatever the scheduling; failed trials are collected, not fatal.
pub fn run_cells(cells: &[TrialConfig], seeds: &[u64]) -> Result<SuiteResult> {
    let jobs: Vec<(&TrialConfig, u64)> = cells.iter().flat_map(|c| seeds.iter().map(move |&s| (c, s))).collect();
    let run = || -> Vec<(usize, std::result::Result<RunRecord, Failure>)> {
        jobs.par_iter()
            .enumerate()
            .map(|(k, (cell, seed))| {
                let outcome = run_trial(cell, *seed).map_err(|e| {
                    log::warn!("{} {} seed {seed}: {e}", cell.problem.name(), cell.column());
                    Failure {
                        problem: cell.problem.name(),
                        host: cell.host.kind.to_string(),
                        estimator: cell.estimator.kind.to_string(),
                        seed: *seed,
                        error: e.to_string(),
                    }
                });
                if let Ok(r) = &outcome {
                    log::info!("{} {} seed {seed}: E={:.3e} HV={:.4}", r.problem, r.column(), r.e, r.hv);
                }
                (k, outcome)
            })
            .collect()
    };
    let mut outcomes = match thread_count()? {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Config(format!("cannot start worker threads: {e}")))?
            .install(run),
        None => run(),
    };
    outcomes.sort_by_key(|(k, _)| *k);
    let mut result = SuiteResult::default();
    for (_, o) in outcomes {
        match o {
            Ok(r) => result.records.push(r),
            Err(f) => result.failures.push(f),
        }
    }
    Ok(result)
}

pub fn run_suite(config: &SuiteConfig) -> Result<SuiteResult> {
    run_cells(&config.cells()?, &config.seeds())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_deterministic() {
        let cfg = SuiteConfig::from_toml(
            "problems = [\"mop3\"]\nestimators = [\"none\", \"ut\"]\nseeds = [3, 1, 2]\nfe_max = 1500\npop_size = 15",
        )
        .unwrap();
        let a = run_suite(&cfg).unwrap();
        assert!(a.failures.is_empty());
        let order: Vec<(String, u64)> = a.records.iter().map(|r| (r.estimator.clone(), r.seed)).collect();
        let expected: Vec<(String, u64)> =
            ["none", "ut"].iter().flat_map(|e| [3, 1, 2].map(|s| (e.to_string(), s))).collect();
        assert_eq!(order, expected);
        let b = run_suite(&cfg).unwrap();
        assert_eq!(a.records, b.records);
    }
}
