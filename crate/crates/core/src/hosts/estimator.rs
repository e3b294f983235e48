//! Population-based ideal point estimators.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::moo::{componentwise_max, ObjectiveVector, Solution};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EstimatorKind {
    /// Componentwise minimum of everything evaluated so far.
    RunningMin,
    /// Running minimum shifted by a fixed share of the objective range.
    Ut,
    /// Running minimum shifted by a share that decays with the budget.
    Drp,
    /// Running minimum, with the estimation component feeding the population.
    Eie,
    /// As [`EstimatorKind::Eie`], optimizing the raw objectives.
    EieSeparate,
}

impl EstimatorKind {
    pub fn all() -> [EstimatorKind; 5] {
        [EstimatorKind::RunningMin, EstimatorKind::Ut, EstimatorKind::Drp, EstimatorKind::Eie, EstimatorKind::EieSeparate]
    }

    pub fn uses_eie(self) -> bool {
        matches!(self, EstimatorKind::Eie | EstimatorKind::EieSeparate)
    }
}

impl fmt::Display for EstimatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EstimatorKind::RunningMin => "none",
            EstimatorKind::Ut => "ut",
            EstimatorKind::Drp => "drp",
            EstimatorKind::Eie => "eie",
            EstimatorKind::EieSeparate => "eie-separate",
        })
    }
}

impl FromStr for EstimatorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "none" | "running-min" => Ok(EstimatorKind::RunningMin),
            "ut" => Ok(EstimatorKind::Ut),
            "drp" => Ok(EstimatorKind::Drp),
            "eie" => Ok(EstimatorKind::Eie),
            "eie-separate" | "eie*" => Ok(EstimatorKind::EieSeparate),
            other => Err(Error::Config(format!("unknown estimator `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EstimatorConfig {
    pub kind: EstimatorKind,
    pub beta_ut: f64,
    pub drp_floor: f64,
}

impl EstimatorConfig {
    pub fn new(kind: EstimatorKind) -> Self {
        EstimatorConfig { kind, beta_ut: 0.1, drp_floor: 1e-3 }
    }
}

/// `(1 - floor) (fe_max - fe) / fe_max + floor`.
pub fn drp_beta(fe: usize, fe_max: usize, floor: f64) -> f64 {
    assert!(fe_max > 0, "budget must be positive");
    let left = fe_max.saturating_sub(fe) as f64 / fe_max as f64;
    (1.0 - floor) * left + floor
}

/// Tracks the running minimum and derives the reference point a host sees.
#[derive(Debug, Clone)]
pub struct Estimator {
    config: EstimatorConfig,
    z: ObjectiveVector,
    fe: usize,
    fe_max: usize,
}

impl Estimator {
    pub fn new(config: EstimatorConfig, m: usize, fe_max: usize) -> Self {
        Estimator { config, z: vec![f64::INFINITY; m], fe: 0, fe_max: fe_max.max(1) }
    }

    pub fn config(&self) -> &EstimatorConfig {
        &self.config
    }

    /// Folds newly evaluated solutions into the running minimum; `fe` is the
    /// evaluation count after they were evaluated.
    pub fn observe(&mut self, q: &[Solution], fe: usize) {
        for s in q {
            for (z, v) in self.z.iter_mut().zip(&s.f) {
                *z = z.min(*v);
            }
        }
        self.fe = fe;
    }

    pub fn running_min(&self) -> &[f64] {
        &self.z
    }

    /// Share of the normalized range subtracted from the running minimum.
    pub fn offset(&self) -> f64 {
        match self.config.kind {
            EstimatorKind::Ut => self.config.beta_ut,
            EstimatorKind::Drp => drp_beta(self.fe, self.fe_max, self.config.drp_floor),
            _ => 0.0,
        }
    }

    /// Estimated ideal point. Offsets are measured in the space normalized by
    /// the running minimum and the maximum of `pop`.
    pub fn reference(&self, pop: &[Solution]) -> ObjectiveVector {
        let beta = self.offset();
        if beta == 0.0 || pop.is_empty() {
            return self.z.clone();
        }
        let fs: Vec<&[f64]> = pop.iter().map(|s| s.f.as_slice()).collect();
        let top = componentwise_max(&fs);
        self.z
            .iter()
            .zip(&top)
            .map(|(z, t)| {
                let range = t - z;
                let range = if range < 1e-12 { 1.0 } else { range };
                z - beta * range
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sol(f: &[f64]) -> Solution {
        Solution::new(vec![], f.to_vec())
    }

    #[test]
    fn names_round_trip() {
        for k in EstimatorKind::all() {
            assert_eq!(k.to_string().parse::<EstimatorKind>().unwrap(), k);
        }
        assert!("median".parse::<EstimatorKind>().is_err());
    }

    #[test]
    fn drp_schedule() {
        assert_eq!(drp_beta(1000, 1000, 1e-3), 1e-3);
        assert_eq!(drp_beta(0, 1000, 1e-3), 1.0);
        let mut last = f64::INFINITY;
        for fe in (0..=1000).step_by(50) {
            let b = drp_beta(fe, 1000, 1e-3);
            assert!(b < last && b >= 1e-3);
            last = b;
        }
    }

    #[test]
    fn running_min_moves_one_component() {
        let mut e = Estimator::new(EstimatorConfig::new(EstimatorKind::RunningMin), 2, 100);
        e.observe(&[sol(&[1.0, 2.0]), sol(&[2.0, 1.0])], 2);
        assert_eq!(e.running_min(), &[1.0, 1.0]);
        e.observe(&[sol(&[0.5, 3.0])], 3);
        assert_eq!(e.running_min(), &[0.5, 1.0]);
    }

    #[test]
    fn ut_offset_is_a_tenth_of_the_range() {
        let mut e = Estimator::new(EstimatorConfig::new(EstimatorKind::Ut), 2, 100);
        let pop = vec![sol(&[1.0, 4.0]), sol(&[3.0, 2.0])];
        e.observe(&pop, 2);
        let z = e.reference(&pop);
        assert!((z[0] - (1.0 - 0.2)).abs() < 1e-15);
        assert!((z[1] - (2.0 - 0.2)).abs() < 1e-15);
    }
}
