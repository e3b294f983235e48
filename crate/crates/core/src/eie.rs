//! Ideal point estimation by extreme weighted sum subproblems.
//!
//! For each objective `i` a subproblem puts weight `1 - alpha` on `f_i` and
//! `alpha / (m - 1)` on every other objective. With `alpha = eps / (eps + 1)`
//! the optimum of the subproblem over a front with equal objective ranges has
//! a normalized `f_i` within `eps * beta` of the ideal component. One CMA-ES
//! per subproblem runs next to the host algorithm; its samples are offered to
//! the host's environmental selection and the host's offspring are injected
//! back into the CMA-ES.

use rand::Rng;

use crate::cmaes::{CmaProcedure, CmaSettings, CmaStatus, StopReport};
use crate::moo::{componentwise_max, componentwise_min, BoxBounds, Evaluator, ObjectiveVector, Solution};
use crate::{Error, Result};

/// Denominators below this are replaced by one during normalization.
pub const DEGENERATE_RANGE: f64 = 1e-12;

/// `eps / (eps + 1)`. Panics unless `eps > 0`.
pub fn alpha_from_epsilon(eps: f64) -> f64 {
    assert!(eps > 0.0 && eps.is_finite(), "tolerance must be positive, got {eps}");
    eps / (eps + 1.0)
}

/// Worst-case normalized error `alpha * beta / (1 - alpha)` of a subproblem
/// optimum. Only meaningful for `alpha <= 0.5`.
pub fn error_bound(alpha: f64, beta: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 0.5) {
        return Err(Error::Precondition(format!("the bound needs 0 < alpha <= 0.5, got {alpha}")));
    }
    Ok(alpha * beta / (1.0 - alpha))
}

/// Extreme weighted sum for objective `index`.
#[derive(Debug, Clone, PartialEq)]
pub struct EwsSubproblem {
    pub index: usize,
    pub alpha: f64,
    pub z_min: ObjectiveVector,
    pub z_max: ObjectiveVector,
}

impl EwsSubproblem {
    /// Subproblem with the identity normalization `[0, 1]^m`.
    pub fn new(index: usize, alpha: f64, m: usize) -> Self {
        assert!(index < m, "objective index out of range");
        assert!(m >= 2, "at least two objectives are required");
        EwsSubproblem { index, alpha, z_min: vec![0.0; m], z_max: vec![1.0; m] }
    }

    pub fn weights(&self) -> Vec<f64> {
        let m = self.z_min.len();
        (0..m)
            .map(|j| if j == self.index { 1.0 - self.alpha } else { self.alpha / (m - 1) as f64 })
            .collect()
    }

    pub fn set_normalization(&mut self, z_min: ObjectiveVector, z_max: ObjectiveVector) {
        assert_eq!(z_min.len(), self.z_min.len());
        assert_eq!(z_max.len(), self.z_max.len());
        self.z_min = z_min;
        self.z_max = z_max;
    }

    /// Normalization bounds taken from a population.
    pub fn normalize_by(&mut self, pop: &[Solution]) {
        let fs: Vec<&[f64]> = pop.iter().map(|s| s.f.as_slice()).collect();
        self.set_normalization(componentwise_min(&fs), componentwise_max(&fs));
    }

    pub fn normalized(&self, f: &[f64]) -> Vec<f64> {
        f.iter()
            .zip(self.z_min.iter().zip(&self.z_max))
            .map(|(v, (lo, hi))| {
                let range = hi - lo;
                let range = if range < DEGENERATE_RANGE { 1.0 } else { range };
                (v - lo) / range
            })
            .collect()
    }
}

/// Weighted sum of the normalized objectives.
pub fn ews_fitness(f: &[f64], sub: &EwsSubproblem) -> f64 {
    sub.normalized(f).iter().zip(sub.weights()).map(|(v, w)| v * w).sum()
}

/// Index of the member with the smallest subproblem value; ties go to the
/// earlier member.
pub fn ews_argmin<V: AsRef<[f64]>>(points: &[V], sub: &EwsSubproblem) -> Option<usize> {
    let mut best: Option<(usize, f64)> = None;
    for (k, p) in points.iter().enumerate() {
        let v = ews_fitness(p.as_ref(), sub);
        if best.is_none_or(|(_, b)| v < b) {
            best = Some((k, v));
        }
    }
    best.map(|(k, _)| k)
}

/// Componentwise minimum over a non-empty population.
pub fn estimate_ideal(pop: &[Solution]) -> ObjectiveVector {
    let fs: Vec<&[f64]> = pop.iter().map(|s| s.f.as_slice()).collect();
    componentwise_min(&fs)
}

/// What each procedure minimizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EieMode {
    /// Extreme weighted sums of normalized objectives.
    Ews,
    /// The raw objectives one at a time.
    Separate,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EieConfig {
    pub epsilons: Vec<f64>,
    pub mode: EieMode,
    pub cma: CmaSettings,
}

impl EieConfig {
    pub fn new(m: usize, mode: EieMode) -> Self {
        EieConfig { epsilons: vec![0.05; m], mode, cma: CmaSettings::default() }
    }
}

#[derive(Debug, Clone)]
struct Batch {
    start: usize,
    end: usize,
    complete: bool,
}

/// State of the estimation component during one trial.
#[derive(Debug, Clone)]
pub struct EieState {
    config: EieConfig,
    bounds: BoxBounds,
    subproblems: Vec<EwsSubproblem>,
    procedures: Vec<CmaProcedure>,
    alphas: Vec<f64>,
    terminated: Vec<bool>,
    restarts: Vec<usize>,
    last_reports: Vec<StopReport>,
    evaluations_used: usize,
    pending: Vec<Option<Batch>>,
    offspring: Vec<Solution>,
}

impl EieState {
    /// Warm-starts one procedure per objective from the host's initial
    /// population.
    pub fn new(pop: &[Solution], bounds: BoxBounds, config: EieConfig) -> Result<Self> {
        if pop.is_empty() {
            return Err(Error::Precondition("the estimation component needs a non-empty population".into()));
        }
        let m = pop[0].f.len();
        if config.epsilons.len() != m || config.epsilons.iter().any(|e| !(*e > 0.0)) {
            return Err(Error::Config(format!("need {m} positive tolerances, got {:?}", config.epsilons)));
        }
        let alphas: Vec<f64> = config.epsilons.iter().map(|e| alpha_from_epsilon(*e)).collect();
        let subproblems: Vec<EwsSubproblem> = (0..m).map(|i| EwsSubproblem::new(i, alphas[i], m)).collect();
        let mut state = EieState {
            config,
            bounds,
            subproblems,
            procedures: Vec::with_capacity(m),
            alphas,
            terminated: vec![false; m],
            restarts: vec![0; m],
            last_reports: vec![StopReport::none(); m],
            evaluations_used: 0,
            pending: vec![None; m],
            offspring: Vec::new(),
        };
        for sub in &mut state.subproblems {
            sub.normalize_by(pop);
        }
        for i in 0..m {
            let p = state.warm_started(i, pop)?;
            state.procedures.push(p);
        }
        Ok(state)
    }

    fn score(&self, i: usize, f: &[f64]) -> f64 {
        match self.config.mode {
            EieMode::Ews => ews_fitness(f, &self.subproblems[i]),
            EieMode::Separate => f[i],
        }
    }

    fn warm_started(&self, i: usize, pop: &[Solution]) -> Result<CmaProcedure> {
        let xs: Vec<_> = pop.iter().map(|s| s.x.clone()).collect();
        let fit: Vec<f64> = pop.iter().map(|s| self.score(i, &s.f)).collect();
        CmaProcedure::warm_start(&xs, &fit, self.bounds.clone(), self.config.cma.clone())
    }

    pub fn num_objectives(&self) -> usize {
        self.subproblems.len()
    }

    pub fn mode(&self) -> EieMode {
        self.config.mode
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }

    pub fn epsilons(&self) -> &[f64] {
        &self.config.epsilons
    }

    pub fn subproblems(&self) -> &[EwsSubproblem] {
        &self.subproblems
    }

    pub fn procedures(&self) -> &[CmaProcedure] {
        &self.procedures
    }

    /// Mutable access for diagnostics and tests.
    pub fn procedure_mut(&mut self, i: usize) -> &mut CmaProcedure {
        &mut self.procedures[i]
    }

    pub fn terminated(&self) -> &[bool] {
        &self.terminated
    }

    pub fn all_terminated(&self) -> bool {
        self.terminated.iter().all(|t| *t)
    }

    pub fn restarts(&self) -> &[usize] {
        &self.restarts
    }

    /// Stop reports of the most recent update.
    pub fn last_reports(&self) -> &[StopReport] {
        &self.last_reports
    }

    /// Evaluations charged to the component so far.
    pub fn evaluations_used(&self) -> usize {
        self.evaluations_used
    }

    /// Samples every live procedure and evaluates the candidates through the
    /// shared budget. When the budget runs out mid-batch the partial batch
    /// is returned and will not be told to its procedure.
    pub fn produce_offspring<R: Rng + ?Sized>(
        &mut self,
        evaluator: &mut Evaluator<'_>,
        rng: &mut R,
    ) -> Result<Vec<Solution>> {
        self.offspring.clear();
        for i in 0..self.procedures.len() {
            self.pending[i] = None;
            if self.terminated[i] || evaluator.exhausted() {
                continue;
            }
            let start = self.offspring.len();
            let mut complete = true;
            for x in self.procedures[i].ask(rng) {
                match evaluator.evaluate(x)? {
                    Some(s) => {
                        self.evaluations_used += 1;
                        self.offspring.push(s);
                    }
                    None => {
                        complete = false;
                        break;
                    }
                }
            }
            self.pending[i] = Some(Batch { start, end: self.offspring.len(), complete });
        }
        Ok(self.offspring.clone())
    }

    /// Feeds the generation back to the procedures: refreshes the
    /// normalization from `pop`, tells each procedure its own samples plus
    /// the injected candidates `o1 + o2`, then restarts or retires
    /// procedures whose stopping tests fired. `o1` must be the set returned
    /// by the last [`EieState::produce_offspring`].
    pub fn update(&mut self, pop: &[Solution], o1: &[Solution], o2: &[Solution]) -> Result<()> {
        if pop.is_empty() {
            return Err(Error::Precondition("update needs a non-empty population".into()));
        }
        debug_assert_eq!(o1.len(), self.offspring.len());
        for sub in &mut self.subproblems {
            sub.normalize_by(pop);
        }
        for i in 0..self.procedures.len() {
            self.last_reports[i] = StopReport::none();
            let batch = match self.pending[i].take() {
                Some(b) if b.complete && !self.terminated[i] => b,
                _ => continue,
            };
            let own: Vec<_> = o1[batch.start..batch.end].iter().map(|s| (s.x.clone(), self.score(i, &s.f))).collect();
            let injected: Vec<_> = if self.procedures[i].lambda() <= self.procedures[i].lambda_default() {
                o1[..batch.start]
                    .iter()
                    .chain(&o1[batch.end..])
                    .chain(o2)
                    .map(|s| (s.x.clone(), self.score(i, &s.f)))
                    .collect()
            } else {
                Vec::new()
            };
            let report = self.procedures[i].tell(&own, &injected);
            if !report.is_empty() {
                log::debug!("procedure {i}: {:?}", report.triggered);
            }
            self.apply_report(i, &report, pop)?;
            self.last_reports[i] = report;
        }
        Ok(())
    }

    /// Applies a stop report as if the procedure had produced it.
    pub fn apply_report(&mut self, i: usize, report: &StopReport, pop: &[Solution]) -> Result<()> {
        if report.exceptional() {
            let mut fresh = self.warm_started(i, pop)?;
            fresh.set_status(CmaStatus::Restarted);
            self.procedures[i] = fresh;
            self.restarts[i] += 1;
        } else if report.conventional() {
            self.procedures[i].set_status(CmaStatus::Stopped);
            self.terminated[i] = true;
        }
        Ok(())
    }
}
