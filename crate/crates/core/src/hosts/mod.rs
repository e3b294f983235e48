//! Host algorithms and population-based ideal point estimators.
//!
//! Every host advances one iteration per [`Host::step`]: it breeds its own
//! offspring with DE + polynomial mutation, folds them into the estimator,
//! and runs environmental selection on the population, the offspring and
//! any extra candidates handed in (the estimation component's samples).

pub mod estimator;
pub mod moead;
pub mod nsga2;
pub mod smsemoa;
pub mod variation;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use estimator::{drp_beta, Estimator, EstimatorConfig, EstimatorKind};
pub use moead::{Moead, Scalarization};
pub use nsga2::{crowding_distance, nsga2_select, Nsga2};
pub use smsemoa::{smsemoa_select, SmsEmoa};
pub use variation::{de_pm_offspring, VariationParams};

use crate::moo::{BoxBounds, Evaluator, RandomSource, Solution};
use crate::{Error, Result};

pub trait Host {
    fn name(&self) -> &'static str;

    fn population(&self) -> &[Solution];

    /// One iteration. `o1` joins environmental selection; the host's own
    /// offspring are returned.
    fn step(
        &mut self,
        o1: &[Solution],
        est: &mut Estimator,
        eval: &mut Evaluator<'_>,
        rng: &mut RandomSource,
    ) -> Result<Vec<Solution>>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HostKind {
    Nsga2,
    Moead,
    Smsemoa,
}

impl HostKind {
    pub fn all() -> [HostKind; 3] {
        [HostKind::Nsga2, HostKind::Moead, HostKind::Smsemoa]
    }
}

impl fmt::Display for HostKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HostKind::Nsga2 => "nsga2",
            HostKind::Moead => "moead",
            HostKind::Smsemoa => "smsemoa",
        })
    }
}

impl FromStr for HostKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "nsga2" | "nsga-ii" => Ok(HostKind::Nsga2),
            "moead" | "moea/d" => Ok(HostKind::Moead),
            "smsemoa" | "sms-emoa" => Ok(HostKind::Smsemoa),
            other => Err(Error::Config(format!("unknown host `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HostConfig {
    pub kind: HostKind,
    pub population_size: usize,
    /// MOEA/D only; defaults to a tenth of the population.
    pub neighborhood_size: Option<usize>,
    pub scalarization: Scalarization,
    pub variation: VariationParams,
}

impl HostConfig {
    /// Population 100 for two objectives, 210 for three.
    pub fn new(kind: HostKind, m: usize) -> Self {
        HostConfig {
            kind,
            population_size: if m == 2 { 100 } else { 210 },
            neighborhood_size: None,
            scalarization: Scalarization::Tchebycheff,
            variation: VariationParams::default(),
        }
    }

    pub fn validate(&self, m: usize) -> Result<()> {
        let v = &self.variation;
        if self.population_size < m + 1 {
            return Err(Error::Config(format!("population must exceed {m}, got {}", self.population_size)));
        }
        if !(v.de_f > 0.0 && v.de_f <= 2.0) {
            return Err(Error::Config(format!("de_f must lie in (0, 2], got {}", v.de_f)));
        }
        if !(0.0..=1.0).contains(&v.de_cr) {
            return Err(Error::Config(format!("de_cr must lie in [0, 1], got {}", v.de_cr)));
        }
        if v.pm_index < 0.0 || v.pm_prob.is_some_and(|p| !(0.0..=1.0).contains(&p)) {
            return Err(Error::Config("invalid polynomial mutation settings".into()));
        }
        Ok(())
    }

    /// Actual population size; MOEA/D rounds down to a simplex lattice.
    pub fn effective_population(&self, m: usize) -> usize {
        match self.kind {
            HostKind::Moead => moead::weight_vectors(m, self.population_size).len(),
            _ => self.population_size,
        }
    }

    /// Host seeded with `pop`, whose size must be
    /// [`HostConfig::effective_population`].
    pub fn build(&self, pop: Vec<Solution>, bounds: BoxBounds) -> Box<dyn Host> {
        let m = pop.first().map_or(2, |s| s.f.len());
        match self.kind {
            HostKind::Nsga2 => Box::new(Nsga2::new(pop, bounds, self.variation)),
            HostKind::Smsemoa => Box::new(SmsEmoa::new(pop, bounds, self.variation)),
            HostKind::Moead => {
                let weights = moead::weight_vectors(m, self.population_size);
                let t = self.neighborhood_size.unwrap_or((weights.len() / 10).max(2));
                Box::new(Moead::new(pop, weights, t, self.scalarization, bounds, self.variation))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for k in HostKind::all() {
            assert_eq!(k.to_string().parse::<HostKind>().unwrap(), k);
        }
        assert!("pmea".parse::<HostKind>().is_err());
    }

    #[test]
    fn config_checks() {
        let c = HostConfig::new(HostKind::Moead, 3);
        assert_eq!(c.effective_population(3), 210);
        assert!(c.validate(3).is_ok());
        assert!(HostConfig { population_size: 3, ..c }.validate(3).is_err());
        let bad = HostConfig { variation: VariationParams { de_f: 0.0, ..VariationParams::default() }, ..c };
        assert!(bad.validate(3).is_err());
    }
}
