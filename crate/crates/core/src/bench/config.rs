//! Declarative experiment configuration.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::biasgen::{BiasedProblem, GeneratorParams, PresetId};
use crate::hosts::{EstimatorConfig, EstimatorKind, HostConfig, HostKind, Scalarization, VariationParams};
use crate::metrics::ErrorForm;
use crate::{Error, Result};

/// A named preset or an inline parameter set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ProblemSpec {
    Preset(PresetId),
    Inline { name: String, params: GeneratorParams },
}

impl ProblemSpec {
    pub fn name(&self) -> String {
        match self {
            ProblemSpec::Preset(id) => id.to_string(),
            ProblemSpec::Inline { name, .. } => name.clone(),
        }
    }

    pub fn build(&self) -> Result<BiasedProblem> {
        match self {
            ProblemSpec::Preset(id) => Ok(BiasedProblem::from_preset(*id)),
            ProblemSpec::Inline { name, params } => BiasedProblem::new(name.clone(), params.clone()),
        }
    }

    pub fn num_objectives(&self) -> usize {
        match self {
            ProblemSpec::Preset(id) => id.params().m,
            ProblemSpec::Inline { params, .. } => params.m,
        }
    }
}

/// Everything one trial needs besides its seed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub problem: ProblemSpec,
    pub host: HostConfig,
    pub estimator: EstimatorConfig,
    pub epsilon: f64,
    pub fe_max: usize,
    pub snapshot_every: usize,
    pub error_form: ErrorForm,
}

impl TrialConfig {
    /// Desk-scale defaults for `problem` run by `host` with `estimator`.
    pub fn new(problem: ProblemSpec, host: HostKind, estimator: EstimatorKind) -> Self {
        let m = problem.num_objectives();
        TrialConfig {
            problem,
            host: HostConfig::new(host, m),
            estimator: EstimatorConfig::new(estimator),
            epsilon: 0.05,
            fe_max: Protocol::Desk.fe_max(m),
            snapshot_every: 1000,
            error_form: ErrorForm::Squared,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.problem.num_objectives();
        self.host.validate(m)?;
        if self.fe_max <= self.host.effective_population(m) {
            return Err(Error::Config(format!(
                "fe_max ({}) must exceed the population size ({})",
                self.fe_max,
                self.host.effective_population(m)
            )));
        }
        if self.snapshot_every == 0 {
            return Err(Error::Config("snapshot_every must be positive".into()));
        }
        if !(self.epsilon > 0.0) {
            return Err(Error::Config(format!("epsilon must be positive, got {}", self.epsilon)));
        }
        Ok(())
    }

    /// Column label used in tables, e.g. `moead+eie`.
    pub fn column(&self) -> String {
        format!("{}+{}", self.host.kind, self.estimator.kind)
    }
}

/// Budget and repetition defaults.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Protocol {
    /// 50 000 / 100 000 evaluations and 10 seeds.
    #[default]
    Desk,
    /// 200 000 / 400 000 evaluations and 30 seeds.
    Full,
}

impl Protocol {
    pub fn fe_max(self, m: usize) -> usize {
        match (self, m) {
            (Protocol::Desk, 2) => 50_000,
            (Protocol::Desk, _) => 100_000,
            (Protocol::Full, 2) => 200_000,
            (Protocol::Full, _) => 400_000,
        }
    }

    pub fn seeds(self) -> Vec<u64> {
        match self {
            Protocol::Desk => (1..=10).collect(),
            Protocol::Full => (1..=30).collect(),
        }
    }
}

/// Variation overrides, all optional.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorConfig {
    pub de_f: Option<f64>,
    pub de_cr: Option<f64>,
    pub pm_index: Option<f64>,
    pub pm_prob: Option<f64>,
}

/// An inline problem in a configuration file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InlineProblem {
    pub name: String,
    pub params: GeneratorParams,
}

/// Contents of a configuration file. Lists expand to their cartesian
/// product; missing keys take the protocol defaults.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    #[serde(default)]
    pub problems: Vec<String>,
    #[serde(default)]
    pub custom: Vec<InlineProblem>,
    #[serde(default)]
    pub hosts: Vec<String>,
    #[serde(default)]
    pub estimators: Vec<String>,
    pub seeds: Option<Vec<u64>>,
    pub fe_max: Option<usize>,
    pub pop_size: Option<usize>,
    pub snapshot_every: Option<usize>,
    pub output_dir: Option<PathBuf>,
    pub epsilon: Option<f64>,
    pub error_form: Option<ErrorForm>,
    pub protocol: Option<Protocol>,
    pub neighborhood_size: Option<usize>,
    pub scalarization: Option<Scalarization>,
    /// Column the verdicts in the summary compare against.
    pub reference: Option<String>,
    #[serde(default)]
    pub operators: OperatorConfig,
}

impl SuiteConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        SuiteConfig::from_toml(&text)
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn protocol(&self) -> Protocol {
        self.protocol.unwrap_or_default()
    }

    pub fn seeds(&self) -> Vec<u64> {
        self.seeds.clone().unwrap_or_else(|| self.protocol().seeds())
    }

    pub fn output_dir(&self) -> PathBuf {
        self.output_dir.clone().unwrap_or_else(|| PathBuf::from("eie-results"))
    }

    fn problem_specs(&self) -> Result<Vec<ProblemSpec>> {
        let mut out = Vec::new();
        for name in &self.problems {
            out.push(ProblemSpec::Preset(name.parse()?));
        }
        for c in &self.custom {
            c.params.validate()?;
            out.push(ProblemSpec::Inline { name: c.name.clone(), params: c.params.clone() });
        }
        if out.is_empty() {
            return Err(Error::Config("no problems configured".into()));
        }
        Ok(out)
    }

    /// One trial configuration per (problem, host, estimator) cell.
    pub fn cells(&self) -> Result<Vec<TrialConfig>> {
        let problems = self.problem_specs()?;
        let hosts: Vec<HostKind> = if self.hosts.is_empty() {
            vec![HostKind::Moead]
        } else {
            self.hosts.iter().map(|h| h.parse()).collect::<Result<_>>()?
        };
        let estimators: Vec<EstimatorKind> = if self.estimators.is_empty() {
            vec![EstimatorKind::RunningMin, EstimatorKind::Eie]
        } else {
            self.estimators.iter().map(|e| e.parse()).collect::<Result<_>>()?
        };
        let seeds = self.seeds();
        if seeds.is_empty() {
            return Err(Error::Config("no seeds configured".into()));
        }
        let mut unique = seeds.clone();
        unique.sort_unstable();
        unique.dedup();
        if unique.len() != seeds.len() {
            return Err(Error::Config("seeds must be distinct".into()));
        }
        let mut cells = Vec::new();
        for p in &problems {
            let m = p.num_objectives();
            for h in &hosts {
                for e in &estimators {
                    let mut t = TrialConfig::new(p.clone(), *h, *e);
                    t.fe_max = self.fe_max.unwrap_or(self.protocol().fe_max(m));
                    if let Some(n) = self.pop_size {
                        t.host.population_size = n;
                    }
                    t.host.neighborhood_size = self.neighborhood_size;
                    if let Some(s) = self.scalarization {
                        t.host.scalarization = s;
                    }
                    let o = &self.operators;
                    let d = VariationParams::default();
                    t.host.variation = VariationParams {
                        de_f: o.de_f.unwrap_or(d.de_f),
                        de_cr: o.de_cr.unwrap_or(d.de_cr),
                        pm_index: o.pm_index.unwrap_or(d.pm_index),
                        pm_prob: o.pm_prob.or(d.pm_prob),
                    };
                    if let Some(s) = self.snapshot_every {
                        t.snapshot_every = s;
                    }
                    if let Some(eps) = self.epsilon {
                        t.epsilon = eps;
                    }
                    if let Some(f) = self.error_form {
                        t.error_form = f;
                    }
                    t.validate()?;
                    cells.push(t);
                }
            }
        }
        Ok(cells)
    }
}

/// Parses `1-10`, `1,2,5` or a mix such as `1-3,7`.
pub fn parse_seeds(text: &str) -> Result<Vec<u64>> {
    let bad = || Error::Config(format!("cannot parse seed list `{text}`"));
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once('-') {
            Some((a, b)) => {
                let (a, b): (u64, u64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
                if a > b {
                    return Err(bad());
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}
