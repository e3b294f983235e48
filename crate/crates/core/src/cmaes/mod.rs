//! CMA-ES with population size adaptation, warm starting, solution
//! injection and four stopping tests.
//!
//! A procedure is driven in ask/tell style:
//!
//! ```
//! use eie::cmaes::{CmaProcedure, CmaSettings};
//! use eie::moo::{random_source, BoxBounds};
//!
//! let bounds = BoxBounds::new(vec![-5.0; 3], vec![5.0; 3]);
//! let mut cma = CmaProcedure::new(vec![1.0; 3], 0.5, bounds, CmaSettings::default());
//! let mut rng = random_source(1);
//! for _ in 0..200 {
//!     let xs = cma.ask(&mut rng);
//!     let scored: Vec<_> = xs.into_iter().map(|x| {
//!         let f = x.iter().map(|v| v * v).sum::<f64>();
//!         (x, f)
//!     }).collect();
//!     if !cma.tell(&scored, &[]).is_empty() {
//!         break;
//!     }
//! }
//! assert!(cma.best_fitness() < 1e-6);
//! ```

pub mod params;
pub mod stop;

use std::collections::VecDeque;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rand::Rng;
use rand_distr::StandardNormal;

pub use params::{default_lambda, StrategyParams};
pub use stop::{StopCriterion, StopReport};

use crate::moo::{BoxBounds, DecisionVector};
use crate::{Error, Result};

/// Tunable constants of a procedure.
#[derive(Debug, Clone, PartialEq)]
pub struct CmaSettings {
    /// Adapt the population size; when off, `lambda` stays at its default.
    pub psa: bool,
    /// Upper population bound as a multiple of the default.
    pub lambda_factor: usize,
    pub psa_beta: f64,
    pub psa_alpha: f64,
    /// Injected steps are clipped to Mahalanobis length `clip * sqrt(n)`.
    pub clip: f64,
    /// Fraction of the source population used by [`CmaProcedure::warm_start`].
    pub warm_quantile: f64,
    /// Diagonal added to the warm-start covariance.
    pub warm_floor: f64,
}

impl Default for CmaSettings {
    fn default() -> Self {
        CmaSettings {
            psa: true,
            lambda_factor: 8,
            psa_beta: 0.4,
            psa_alpha: 1.4,
            clip: 2.0,
            warm_quantile: 0.1,
            warm_floor: 1e-6,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmaStatus {
    Running,
    /// Running again after a warm restart.
    Restarted,
    Stopped,
}

#[derive(Debug, Clone)]
pub struct CmaProcedure {
    settings: CmaSettings,
    bounds: BoxBounds,
    n: usize,
    mean: DVector<f64>,
    sigma: f64,
    cov: DMatrix<f64>,
    eig_vectors: DMatrix<f64>,
    eig_values: DVector<f64>,
    inv_sqrt: DMatrix<f64>,
    p_c: DVector<f64>,
    p_sigma: DVector<f64>,
    lambda: usize,
    lambda_real: f64,
    lambda_default: usize,
    strategy: StrategyParams,
    psa_path: DVector<f64>,
    psa_gamma: f64,
    initial_sigma: f64,
    initial_eigenvalues: Vec<f64>,
    generation: usize,
    best_history: VecDeque<f64>,
    last_values: Vec<f64>,
    best_ever: f64,
    status: CmaStatus,
}

fn sorted(v: &DVector<f64>) -> Vec<f64> {
    let mut out: Vec<f64> = v.iter().copied().collect();
    out.sort_by(f64::total_cmp);
    out
}

impl CmaProcedure {
    /// A procedure with identity covariance.
    pub fn new(mean: DecisionVector, sigma: f64, bounds: BoxBounds, settings: CmaSettings) -> Self {
        let n = mean.len();
        CmaProcedure::with_covariance(mean, sigma, DMatrix::identity(n, n), bounds, settings)
    }

    /// Panics when the dimensions disagree, `sigma` is not positive or the
    /// covariance is not symmetric positive definite.
    pub fn with_covariance(
        mean: DecisionVector,
        sigma: f64,
        cov: DMatrix<f64>,
        bounds: BoxBounds,
        settings: CmaSettings,
    ) -> Self {
        let n = mean.len();
        assert!(n >= 1, "dimension must be positive");
        assert_eq!(bounds.dim(), n, "bounds and mean differ in dimension");
        assert_eq!(cov.shape(), (n, n), "covariance must be n x n");
        assert!(sigma > 0.0 && sigma.is_finite(), "step size must be positive");
        let lambda_default = default_lambda(n);
        let strategy = StrategyParams::new(n, lambda_default);
        let mut proc = CmaProcedure {
            settings,
            bounds,
            n,
            mean: DVector::from_vec(mean),
            sigma,
            cov,
            eig_vectors: DMatrix::identity(n, n),
            eig_values: DVector::from_element(n, 1.0),
            inv_sqrt: DMatrix::identity(n, n),
            p_c: DVector::zeros(n),
            p_sigma: DVector::zeros(n),
            lambda: lambda_default,
            lambda_real: lambda_default as f64,
            lambda_default,
            strategy,
            psa_path: DVector::zeros(n + n * n),
            psa_gamma: 0.0,
            initial_sigma: sigma,
            initial_eigenvalues: Vec::new(),
            generation: 0,
            best_history: VecDeque::new(),
            last_values: Vec::new(),
            best_ever: f64::INFINITY,
            status: CmaStatus::Running,
        };
        proc.refresh_eigen();
        assert!(proc.eig_values.iter().all(|d| *d > 0.0), "covariance must be positive definite");
        proc.initial_eigenvalues = sorted(&proc.eig_values);
        proc
    }

    /// Gaussian moment matching of the best `warm_quantile` share of
    /// `points` ranked by `fitness` (lower is better). The step size starts
    /// at one.
    pub fn warm_start(
        points: &[DecisionVector],
        fitness: &[f64],
        bounds: BoxBounds,
        settings: CmaSettings,
    ) -> Result<Self> {
        if points.is_empty() || points.len() != fitness.len() {
            return Err(Error::Precondition("warm start needs a non-empty scored population".into()));
        }
        let n = bounds.dim();
        let mut order: Vec<usize> = (0..points.len()).filter(|&i| fitness[i].is_finite()).collect();
        if order.is_empty() {
            return Err(Error::Precondition("warm start population has no finite fitness".into()));
        }
        order.sort_by(|&a, &b| fitness[a].total_cmp(&fitness[b]));
        let k = ((points.len() as f64 * settings.warm_quantile - 1e-9).ceil() as usize).clamp(1, order.len());
        let donors: Vec<DVector<f64>> = order[..k].iter().map(|&i| DVector::from_column_slice(&points[i])).collect();

        let mut mean = DVector::zeros(n);
        for d in &donors {
            mean += d;
        }
        mean /= k as f64;
        let mut cov = DMatrix::zeros(n, n);
        for d in &donors {
            let c = d - &mean;
            cov += &c * c.transpose();
        }
        cov /= k as f64;
        let floor = DMatrix::identity(n, n) * settings.warm_floor;
        let candidate = &cov + &floor;
        let cov = if candidate.clone().cholesky().is_some() {
            candidate
        } else {
            DMatrix::from_diagonal(&cov.diagonal()) + floor
        };
        let mut mean_vec: Vec<f64> = mean.iter().copied().collect();
        bounds.clamp_in_place(&mut mean_vec);
        Ok(CmaProcedure::with_covariance(mean_vec, 1.0, cov, bounds, settings))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn lambda_default(&self) -> usize {
        self.lambda_default
    }

    pub fn lambda_bounds(&self) -> (usize, usize) {
        (self.lambda_default, self.settings.lambda_factor * self.lambda_default)
    }

    pub fn mean(&self) -> &[f64] {
        self.mean.as_slice()
    }

    pub fn step_size(&self) -> f64 {
        self.sigma
    }

    /// Overrides the step size, e.g. to probe the stopping tests.
    pub fn set_step_size(&mut self, sigma: f64) {
        assert!(sigma > 0.0, "step size must be positive");
        self.sigma = sigma;
    }

    pub fn initial_step_size(&self) -> f64 {
        self.initial_sigma
    }

    pub fn covariance(&self) -> &DMatrix<f64> {
        &self.cov
    }

    /// Eigenvalues of the covariance, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        sorted(&self.eig_values)
    }

    pub fn generation(&self) -> usize {
        self.generation
    }

    pub fn best_fitness(&self) -> f64 {
        self.best_ever
    }

    pub fn best_history(&self) -> impl Iterator<Item = f64> + '_ {
        self.best_history.iter().copied()
    }

    pub fn status(&self) -> CmaStatus {
        self.status
    }

    pub fn set_status(&mut self, status: CmaStatus) {
        self.status = status;
    }

    pub fn is_live(&self) -> bool {
        self.status != CmaStatus::Stopped
    }

    /// Draws `lambda` candidates from `N(mean, sigma^2 C)`, clamped to the box.
    pub fn ask<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<DecisionVector> {
        if !self.is_live() {
            return Vec::new();
        }
        let scale = self.eig_values.map(|d| d.sqrt());
        (0..self.lambda)
            .map(|_| {
                let z = DVector::from_fn(self.n, |_, _| rng.sample::<f64, _>(StandardNormal));
                let y = &self.eig_vectors * z.component_mul(&scale);
                let mut x: Vec<f64> = (&self.mean + y * self.sigma).iter().copied().collect();
                self.bounds.clamp_in_place(&mut x);
                x
            })
            .collect()
    }

    /// Updates the distribution from this generation's own samples and,
    /// while the population is at its default size, injected candidates.
    /// Candidates with non-finite fitness are dropped.
    pub fn tell(&mut self, own: &[(DecisionVector, f64)], injected: &[(DecisionVector, f64)]) -> StopReport {
        assert_eq!(own.len(), self.lambda, "tell expects the full batch of lambda samples");
        let use_injected = self.lambda <= self.lambda_default;
        let mut pool: Vec<(&DecisionVector, f64, bool)> = own.iter().map(|(x, f)| (x, *f, false)).collect();
        if use_injected {
            pool.extend(injected.iter().map(|(x, f)| (x, *f, true)));
        }
        let before = pool.len();
        pool.retain(|(_, f, _)| f.is_finite());
        if pool.len() < before {
            log::warn!("discarded {} candidates with non-finite fitness", before - pool.len());
        }
        self.last_values = own.iter().map(|(_, f)| *f).filter(|f| f.is_finite()).collect();
        if pool.is_empty() {
            self.generation += 1;
            return self.check_stop();
        }
        // stable: ties keep sampling order, own samples before injected ones
        pool.sort_by(|a, b| a.1.total_cmp(&b.1));
        pool.truncate(self.lambda);
        let best = pool[0].1;
        self.best_ever = self.best_ever.min(best);

        self.update_distribution(&pool);

        self.generation += 1;
        let capacity = 10 + (30.0 * self.n as f64 / self.lambda_default as f64).ceil() as usize;
        self.best_history.push_back(best);
        while self.best_history.len() > capacity {
            self.best_history.pop_front();
        }
        self.check_stop()
    }

    fn update_distribution(&mut self, selected: &[(&DecisionVector, f64, bool)]) {
        let n = self.n;
        let nf = n as f64;
        let sp = &self.strategy;
        let mu = sp.mu.min(selected.len());
        let wsum: f64 = sp.weights[..mu].iter().sum();
        let weights: Vec<f64> = sp.weights[..mu].iter().map(|w| w / wsum).collect();
        let mu_eff = 1.0 / weights.iter().map(|w| w * w).sum::<f64>();
        let limit = self.settings.clip * nf.sqrt();

        let steps: Vec<DVector<f64>> = selected[..mu]
            .iter()
            .map(|(x, _, injected)| {
                let mut y = (DVector::from_column_slice(x) - &self.mean) / self.sigma;
                if *injected {
                    let len = (&self.inv_sqrt * &y).norm();
                    if len > limit {
                        y *= limit / len;
                    }
                }
                y
            })
            .collect();
        let mut y_w = DVector::zeros(n);
        for (w, y) in weights.iter().zip(&steps) {
            y_w += y * *w;
        }

        let old_cov = self.cov.clone();
        let white_mean = &self.inv_sqrt * &y_w;
        self.mean += &y_w * self.sigma;

        let cs = sp.c_sigma;
        self.p_sigma = &self.p_sigma * (1.0 - cs) + &white_mean * (cs * (2.0 - cs) * mu_eff).sqrt();
        let norm_ps = self.p_sigma.norm();
        let decay = 1.0 - (1.0 - cs).powi(2 * (self.generation as i32 + 1));
        let h_sigma = if norm_ps / decay.max(1e-300).sqrt() < (1.4 + 2.0 / (nf + 1.0)) * sp.chi_n { 1.0 } else { 0.0 };
        let cc = sp.c_c;
        self.p_c = &self.p_c * (1.0 - cc) + &y_w * (h_sigma * (cc * (2.0 - cc) * mu_eff).sqrt());

        let (c1, cmu) = (sp.c1, sp.c_mu);
        let mut rank_mu = DMatrix::zeros(n, n);
        for (w, y) in weights.iter().zip(&steps) {
            rank_mu += (y * y.transpose()) * *w;
        }
        let keep = 1.0 - c1 - cmu + (1.0 - h_sigma) * c1 * cc * (2.0 - cc);
        let mut cov = &old_cov * keep + (&self.p_c * self.p_c.transpose()) * c1 + rank_mu * cmu;
        cov = (&cov + cov.transpose()) * 0.5;

        let exponent = ((cs / sp.d_sigma) * (norm_ps / sp.chi_n - 1.0)).min(1.0);
        let growth = exponent.exp();
        self.sigma *= growth;

        if self.settings.psa {
            // change of the full covariance sigma^2 C, whitened by the old one
            let delta_cov = &self.inv_sqrt * (&cov * (growth * growth) - &old_cov) * &self.inv_sqrt;
            let mut delta = DVector::zeros(n + n * n);
            delta.rows_mut(0, n).copy_from(&white_mean);
            for (k, v) in delta_cov.iter().enumerate() {
                delta[n + k] = v / 2f64.sqrt();
            }
            let beta = self.settings.psa_beta;
            let scale = (beta * (2.0 - beta)).sqrt() / sp.update_norm.sqrt();
            self.psa_path = &self.psa_path * (1.0 - beta) + delta * scale;
            self.psa_gamma = (1.0 - beta).powi(2) * self.psa_gamma + beta * (2.0 - beta);
            let ratio = self.psa_path.norm_squared() / self.settings.psa_alpha;
            let (lo, hi) = self.lambda_bounds();
            self.lambda_real = (self.lambda_real * (beta * (self.psa_gamma - ratio)).exp()).clamp(lo as f64, hi as f64);
            let next = (self.lambda_real.round() as usize).clamp(lo, hi);
            if next != self.lambda {
                self.lambda = next;
                self.strategy = StrategyParams::new(n, next);
            }
        }

        self.cov = cov;
        self.refresh_eigen();
    }

    fn refresh_eigen(&mut self) {
        let eig = SymmetricEigen::new(self.cov.clone());
        let top = eig.eigenvalues.iter().copied().fold(0.0, f64::max);
        let floor = if top > 0.0 { top * 1e-20 } else { 1e-300 };
        let values = eig.eigenvalues.map(|d| if d > floor { d } else { floor });
        let vectors = eig.eigenvectors;
        let inv = values.map(|d| 1.0 / d.sqrt());
        self.inv_sqrt = &vectors * DMatrix::from_diagonal(&inv) * vectors.transpose();
        if values.iter().zip(eig.eigenvalues.iter()).any(|(a, b)| a != b) {
            self.cov = &vectors * DMatrix::from_diagonal(&values) * vectors.transpose();
            self.cov = (&self.cov + self.cov.transpose()) * 0.5;
        }
        self.eig_values = values;
        self.eig_vectors = vectors;
    }

    /// Evaluates the four stopping tests on the current state.
    pub fn check_stop(&self) -> StopReport {
        let mut report = StopReport::none();
        if self.generation == 0 {
            return report;
        }
        let n = self.n;
        let s = self.sigma;

        let axis = (0..n).all(|i| {
            let len = 0.1 * s * self.eig_values[i].sqrt();
            (0..n).all(|k| self.mean[k] + len * self.eig_vectors[(k, i)] == self.mean[k])
        });
        if axis {
            report.triggered.push(StopCriterion::NoEffectAxis);
        }

        if (0..n).all(|i| self.mean[i] + 0.2 * s * self.cov[(i, i)].sqrt() == self.mean[i]) {
            report.triggered.push(StopCriterion::NoEffectCoord);
        }

        let window = 10 + (30.0 * n as f64 / self.lambda as f64).ceil() as usize;
        if self.best_history.len() >= window {
            let values = self.best_history.iter().rev().take(window).chain(self.last_values.iter());
            let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(*v), hi.max(*v)));
            let tol_x = 1e-6 * self.initial_sigma;
            let small = (0..n).all(|i| s * self.cov[(i, i)].sqrt() < tol_x && s * self.p_c[i] < tol_x);
            if hi - lo < 1e-3 && small {
                report.triggered.push(StopCriterion::TolFunTolX);
            }
        }

        let now = sorted(&self.eig_values);
        let up = now
            .iter()
            .zip(&self.initial_eigenvalues)
            .any(|(d, d0)| s * d.sqrt() > 1e4 * self.initial_sigma * d0.sqrt());
        if up {
            report.triggered.push(StopCriterion::TolXUp);
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moo::random_source;

    fn sphere(x: &[f64]) -> f64 {
        x.iter().map(|v| v * v).sum()
    }

    fn run_sphere(seed: u64, settings: CmaSettings, budget: usize) -> (f64, usize) {
        let n = 7;
        let bounds = BoxBounds::new(vec![-5.0; n], vec![5.0; n]);
        let mut rng = random_source(seed);
        let start: Vec<f64> = (0..n).map(|_| rng.random_range(-3.0..3.0)).collect();
        let mut cma = CmaProcedure::new(start, 1.0, bounds, settings);
        let mut evals = 0;
        while evals < budget {
            let scored: Vec<_> = cma.ask(&mut rng).into_iter().map(|x| { let f = sphere(&x); (x, f) }).collect();
            evals += scored.len();
            let (lo, hi) = cma.lambda_bounds();
            cma.tell(&scored, &[]);
            assert!(cma.lambda() >= lo && cma.lambda() <= hi);
            if cma.best_fitness() < 1e-8 {
                break;
            }
        }
        (cma.best_fitness(), evals)
    }

    #[test]
    fn sphere_converges_within_budget() {
        let mut runs: Vec<usize> = (0..5).map(|s| run_sphere(s, CmaSettings::default(), 10_000)).map(|(f, e)| {
            assert!(f < 1e-8, "best {f} after {e}");
            e
        }).collect();
        runs.sort();
        assert!(runs[2] <= 10_000);
    }

    #[test]
    fn covariance_stays_positive_definite() {
        let n = 5;
        let bounds = BoxBounds::new(vec![-1e3; n], vec![1e3; n]);
        let mut rng = random_source(9);
        let scales: Vec<f64> = (0..n).map(|i| 10f64.powi(i as i32)).collect();
        let f = |x: &[f64]| x.iter().zip(&scales).map(|(v, s)| s * v * v).sum::<f64>();
        let mut cma = CmaProcedure::new(vec![3.0; n], 1.0, bounds, CmaSettings::default());
        for _ in 0..500 {
            let scored: Vec<_> = cma.ask(&mut rng).into_iter().map(|x| { let v = f(&x); (x, v) }).collect();
            cma.tell(&scored, &[]);
            let c = cma.covariance();
            assert!((c - c.transpose()).abs().max() <= 1e-12 * c.abs().max());
            assert!(cma.eigenvalues()[0] > 0.0);
            assert!(cma.step_size() > 0.0);
        }
    }

    #[test]
    fn stop_tests() {
        let n = 4;
        let bounds = BoxBounds::new(vec![-1.0; n], vec![1.0; n]);
        let mut cma = CmaProcedure::new(vec![0.2; n], 0.3, bounds, CmaSettings::default());
        assert!(cma.check_stop().is_empty());
        let mut rng = random_source(2);
        let scored: Vec<_> = cma.ask(&mut rng).into_iter().map(|x| { let f = sphere(&x); (x, f) }).collect();
        assert!(cma.tell(&scored, &[]).is_empty());

        let mut tiny = cma.clone();
        tiny.set_step_size(1e-30);
        assert!(tiny.check_stop().contains(StopCriterion::NoEffectCoord));
        assert!(tiny.check_stop().contains(StopCriterion::NoEffectAxis));

        let mut huge = cma.clone();
        huge.set_step_size(cma.initial_step_size() * 1e5);
        let report = huge.check_stop();
        assert!(report.contains(StopCriterion::TolXUp));
        assert!(report.exceptional());
    }

    #[test]
    fn warm_start_examples() {
        let bounds = BoxBounds::new(vec![-1.0; 3], vec![1.0; 3]);
        let same = vec![vec![0.1, 0.2, 0.3]; 20];
        let fit = vec![1.0; 20];
        let cma = CmaProcedure::warm_start(&same, &fit, bounds.clone(), CmaSettings::default()).unwrap();
        assert_eq!(cma.mean(), &[0.1, 0.2, 0.3]);
        let floor = CmaSettings::default().warm_floor;
        assert!((cma.covariance() - DMatrix::identity(3, 3) * floor).abs().max() < 1e-18);
        assert_eq!(cma.step_size(), 1.0);
        assert_eq!(cma.lambda(), cma.lambda_default());
        assert!(cma.check_stop().is_empty());
        assert!(CmaProcedure::warm_start(&[], &[], bounds, CmaSettings::default()).is_err());
    }

    #[test]
    fn warm_start_uses_top_decile() {
        let bounds = BoxBounds::new(vec![-10.0; 1], vec![200.0; 1]);
        let pts: Vec<Vec<f64>> = (0..100).map(|i| vec![i as f64]).collect();
        let fit: Vec<f64> = (0..100).map(|i| i as f64).collect();
        let cma = CmaProcedure::warm_start(&pts, &fit, bounds, CmaSettings::default()).unwrap();
        // the donors are 0..=9
        assert!((cma.mean()[0] - 4.5).abs() < 1e-12);
        assert!((cma.covariance()[(0, 0)] - (8.25 + 1e-6)).abs() < 1e-9);
    }

    #[test]
    fn warm_start_matches_gaussian_moments() {
        let bounds = BoxBounds::new(vec![-10.0; 2], vec![10.0; 2]);
        let mut rng = random_source(4);
        let pts: Vec<Vec<f64>> = (0..100_000)
            .map(|_| vec![rng.sample::<f64, _>(StandardNormal) * 2.0, rng.sample::<f64, _>(StandardNormal) * 0.5])
            .collect();
        let settings = CmaSettings { warm_quantile: 0.1, ..CmaSettings::default() };
        // constant fitness keeps index order, so the donors are the first 10^4 points
        let cma = CmaProcedure::warm_start(&pts, &vec![0.0; pts.len()], bounds, settings).unwrap();
        let c = cma.covariance();
        assert!((c[(0, 0)] - 4.0).abs() < 0.15);
        assert!((c[(1, 1)] - 0.25).abs() < 0.01);
        assert!(c[(0, 1)].abs() < 0.03);
    }

    #[test]
    fn ask_respects_bounds_and_centers_on_mean() {
        let bounds = BoxBounds::new(vec![0.0; 2], vec![1.0; 2]);
        let mut cma = CmaProcedure::new(vec![0.5, 0.5], 0.05, bounds.clone(), CmaSettings::default());
        let mut rng = random_source(3);
        let mut sum = [0.0; 2];
        let mut count = 0.0f64;
        for _ in 0..12_000 {
            for x in cma.ask(&mut rng) {
                assert!(bounds.contains(&x));
                sum[0] += x[0];
                sum[1] += x[1];
                count += 1.0;
            }
        }
        let tol = 4.0 * 0.05 / count.sqrt();
        assert!((sum[0] / count - 0.5).abs() < tol);
        assert!((sum[1] / count - 0.5).abs() < tol);

        cma.set_step_size(1e-300);
        for x in cma.ask(&mut rng) {
            assert_eq!(x, vec![0.5, 0.5]);
        }
    }

    #[test]
    fn injection_is_ignored_above_default_lambda_and_clipped_below() {
        let bounds = BoxBounds::new(vec![-100.0; 3], vec![100.0; 3]);
        let base = CmaProcedure::new(vec![0.0; 3], 1.0, bounds, CmaSettings { psa: false, ..CmaSettings::default() });
        let mut rng = random_source(8);
        let own: Vec<_> = base.ask(&mut rng).into_iter().map(|x| { let f = sphere(&x) + 1.0; (x, f) }).collect();
        let far = vec![(vec![90.0, 0.0, 0.0], 0.0)];
        let mut with = base.clone();
        with.tell(&own, &far);
        let shift: f64 = DVector::from_column_slice(with.mean()).norm();
        // one clipped step of length 2 sqrt(3), weighted by the top weight
        assert!(shift <= 2.0 * 3f64.sqrt() + 1e-9 + 3.0);
        assert!(with.mean()[0] > 0.0);
        let mut without = base.clone();
        without.tell(&own, &[]);
        let mut again = base.clone();
        again.tell(&own, &[]);
        assert_eq!(without.mean(), again.mean());
    }
}
