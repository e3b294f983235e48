//! Estimation error, hypervolume and the rank-sum test.

pub mod error;
pub mod hv;
pub mod wilcoxon;

pub use error::{e_metric, ErrorForm};
pub use hv::{hv_contributions, hv_exact, hv_monte_carlo, hv_normalized, NORMALIZED_REFERENCE};
pub use wilcoxon::{midranks, rank_sum_test, wilcoxon_rank_sum, RankSumTest, Sense, Verdict};

use serde::{Deserialize, Serialize};

/// Final metrics of one trial.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricReport {
    pub e_value: f64,
    pub hv_value: f64,
    pub eie_fe_fraction: f64,
}
