//! Experiment harness: configuration, trials, parallel suites and reports.

pub mod config;
pub mod format;
pub mod output;
pub mod report;
pub mod suite;
pub mod trial;

pub use config::{parse_seeds, InlineProblem, OperatorConfig, ProblemSpec, Protocol, SuiteConfig, TrialConfig};
pub use format::{round6, sig6};
pub use output::{emit, read_raw, read_trajectory, Failure, RawRow};
pub use report::{report, summarize_dir, CellSummary, Stats, Summary};
pub use suite::{run_cells, run_suite, SuiteResult, THREADS_VAR};
pub use trial::{config_digest, run_trial, RunRecord, Snapshot};
