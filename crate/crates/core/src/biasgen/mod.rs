//! Parametric generator of biased multi-objective test problems.
//!
//! Every objective has the form `f_i = w_i (h_i + sum_j theta_ij g'_j)`:
//! a position function `h` built on the unit simplex and a non-negative
//! distance function `g'` that vanishes exactly on the Pareto set. The
//! position-related bias (`c_pos`, `gamma`) concentrates random solutions
//! around `c_pos` on the front, while the distance-related bias (`a3`) and
//! the position-dependent multiplier (`a4`, `c_dis`) keep them away from it.
//!
//! The ideal point of every generated instance is the origin and the nadir
//! point is `w`.

pub mod distance;
pub mod position;
pub mod presets;
pub mod sampling;

use serde::{Deserialize, Serialize};

pub use distance::{distance_ratio, scale_b, DistanceShape};
pub use position::{chat, remap, sigma, simplex_map};
pub use presets::{preset, PresetId};
pub use sampling::{sample_pareto_front, sample_pareto_set, FrontSampling};

use crate::moo::{BoxBounds, ObjectiveVector, Problem};
use crate::{Error, Result};

/// Tolerance on simplex sums. The three-objective presets use `0.33`
/// components, which sum to `0.99`.
const SIMPLEX_SUM_TOL: f64 = 0.011;

/// Full parameter set of one generated problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorParams {
    pub m: usize,
    pub n: usize,
    /// Number of position-related variables; the first `s` variables lie in
    /// `[0, 1]`, the rest in `[-1, 1]`.
    pub s: usize,
    pub p: Vec<f64>,
    pub c_pos: Vec<f64>,
    pub gamma: f64,
    pub theta: Vec<Vec<f64>>,
    #[serde(flatten)]
    pub shape: DistanceShape,
    pub c_dis: Option<Vec<f64>>,
    pub w: Vec<f64>,
    #[serde(default)]
    pub inverted: bool,
}

fn check_simplex(name: &str, v: &[f64], m: usize) -> Result<()> {
    if v.len() != m {
        return Err(Error::InvalidParams(format!("{name} must have {m} components")));
    }
    if v.iter().any(|c| !(c.is_finite() && *c >= 0.0)) {
        return Err(Error::InvalidParams(format!("{name} components must be non-negative")));
    }
    let sum: f64 = v.iter().sum();
    if (sum - 1.0).abs() > SIMPLEX_SUM_TOL {
        return Err(Error::InvalidParams(format!("{name} must sum to one, got {sum}")));
    }
    Ok(())
}

impl GeneratorParams {
    pub fn validate(&self) -> Result<()> {
        let m = self.m;
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        if m < 2 {
            return bad("at least two objectives are required".into());
        }
        if self.s < m - 1 || self.s >= self.n {
            return bad(format!("need m-1 <= s < n, got m={m}, s={}, n={}", self.s, self.n));
        }
        if self.n - self.s < m {
            return bad(format!("need at least m = {m} distance variables, got {}", self.n - self.s));
        }
        if self.p.len() != m || self.p.iter().any(|v| !(v.is_finite() && *v > 0.0)) {
            return bad("p must have m positive components".into());
        }
        check_simplex("c_pos", &self.c_pos, m)?;
        if !(self.gamma > 0.0 && self.gamma <= 1.0) {
            return bad(format!("gamma must lie in (0, 1], got {}", self.gamma));
        }
        if self.theta.len() != m
            || self.theta.iter().any(|r| r.len() != m || r.iter().any(|v| !(v.is_finite() && *v >= 0.0)))
        {
            return bad("theta must be an m x m matrix of non-negative entries".into());
        }
        if self.w.len() != m || self.w.iter().any(|v| !(v.is_finite() && *v > 0.0)) {
            return bad("w must have m positive components".into());
        }
        let a = &self.shape;
        if [a.a1, a.a2, a.a3, a.a4, a.a5].iter().any(|v| !(v.is_finite() && *v >= 0.0)) || a.a3 <= 0.0 {
            return bad("a1..a5 must be non-negative and a3 positive".into());
        }
        match &self.c_dis {
            Some(c) => check_simplex("c_dis", c, m)?,
            None if a.a2 > 0.0 || a.a4 > 0.0 || a.a5 > 0.0 => {
                return bad("c_dis is required when a2, a4 or a5 is positive".into());
            }
            None => {}
        }
        Ok(())
    }

    pub fn bounds(&self) -> BoxBounds {
        let lower = (0..self.n).map(|i| if i < self.s { 0.0 } else { -1.0 }).collect();
        BoxBounds::new(lower, vec![1.0; self.n])
    }

    /// Simplex coordinates of `c_pos`.
    pub fn chat(&self) -> Vec<f64> {
        position::chat(&self.c_pos)
    }

    /// Distance ratio of a simplex point; zero when no `c_dis` is set (the
    /// ratio is then unused).
    pub fn ratio(&self, y: &[f64]) -> f64 {
        match &self.c_dis {
            Some(c) => distance::distance_ratio(y, c),
            None => 0.0,
        }
    }

    /// Position function values `h` and the simplex point `y` they derive from.
    pub fn position_value(&self, x_pos: &[f64]) -> (Vec<f64>, Vec<f64>) {
        let y = position::simplex_point(x_pos, &self.chat(), self.gamma);
        (position::shape(&y, &self.p, self.inverted), y)
    }

    /// Distance values `g'` of a full decision vector.
    pub fn distance_values(&self, x: &[f64]) -> Vec<f64> {
        let (_, y) = self.position_value(&x[..self.s]);
        distance::distance_values(x, self.s, self.m, self.ratio(&y), &self.shape)
    }

    /// Completes `x_pos` with the Pareto-optimal distance variables.
    pub fn pareto_set_point(&self, x_pos: &[f64]) -> Vec<f64> {
        assert_eq!(x_pos.len(), self.s, "expected {} position variables", self.s);
        let (_, y) = self.position_value(x_pos);
        let ell = self.ratio(&y);
        let mut x = x_pos.to_vec();
        x.extend(((self.s + 1)..=self.n).map(|j| distance::pareto_set_value(j, self.n, ell, &self.shape, self.m)));
        x
    }

    /// Objective vector of `x`. Panics when `x` has the wrong length or lies
    /// outside the box.
    pub fn evaluate(&self, x: &[f64]) -> ObjectiveVector {
        assert_eq!(x.len(), self.n, "expected {} variables, got {}", self.n, x.len());
        let in_box = x.iter().enumerate().all(|(i, v)| {
            let lo = if i < self.s { 0.0 } else { -1.0 };
            *v >= lo - 1e-12 && *v <= 1.0 + 1e-12
        });
        assert!(in_box, "decision vector outside the box: {x:?}");

        let (h, y) = self.position_value(&x[..self.s]);
        let g = distance::distance_values(x, self.s, self.m, self.ratio(&y), &self.shape);
        (0..self.m)
            .map(|i| {
                let mixed: f64 = self.theta[i].iter().zip(&g).map(|(t, gj)| t * gj).sum();
                self.w[i] * (h[i] + mixed)
            })
            .collect()
    }
}

/// A generated problem, ready to hand to an optimizer.
#[derive(Debug, Clone)]
pub struct BiasedProblem {
    name: String,
    params: GeneratorParams,
    bounds: BoxBounds,
}

impl BiasedProblem {
    pub fn new(name: impl Into<String>, params: GeneratorParams) -> Result<Self> {
        params.validate()?;
        let bounds = params.bounds();
        Ok(BiasedProblem { name: name.into(), params, bounds })
    }

    pub fn from_preset(id: PresetId) -> Self {
        BiasedProblem::new(id.to_string(), id.params()).expect("presets are valid")
    }

    /// Looks up a preset by its lowercase name.
    pub fn named(name: &str) -> Result<Self> {
        Ok(BiasedProblem::from_preset(name.parse()?))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn params(&self) -> &GeneratorParams {
        &self.params
    }
}

impl Problem for BiasedProblem {
    fn num_objectives(&self) -> usize {
        self.params.m
    }

    fn num_variables(&self) -> usize {
        self.params.n
    }

    fn bounds(&self) -> &BoxBounds {
        &self.bounds
    }

    fn evaluate(&self, x: &[f64]) -> ObjectiveVector {
        self.params.evaluate(x)
    }

    fn ideal(&self) -> Option<ObjectiveVector> {
        Some(vec![0.0; self.params.m])
    }

    fn nadir(&self) -> Option<ObjectiveVector> {
        Some(self.params.w.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mop(name: &str) -> GeneratorParams {
        name.parse::<PresetId>().unwrap().params()
    }

    #[test]
    fn center_maps_to_c_pos() {
        let mut params = mop("mop11");
        params.p = vec![1.0; 3];
        // sigma_i = chat_i with one variable per group.
        let x_pos = params.chat();
        let (h, _) = params.position_value(&x_pos);
        for (hi, ci) in h.iter().zip(&params.c_pos) {
            assert!((hi - ci).abs() < 1e-12);
        }
    }

    #[test]
    fn pareto_set_point_has_zero_distance() {
        let params = mop("mop1");
        let x = params.pareto_set_point(&[0.3, 0.1, 0.7, 0.5, 0.9]);
        for g in params.distance_values(&x) {
            assert!(g.abs() < 1e-12);
        }
        // a2 = a5 = 0: the distance variables are constants.
        for j in 6..=7 {
            let expected = 0.9 * ((7.0 + 2.0) * j as f64 * std::f64::consts::PI / 14.0).cos();
            assert!((x[j - 1] - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn mop2_center_objective() {
        let params = mop("mop2");
        let x_pos = vec![0.5; 5];
        let x = params.pareto_set_point(&x_pos);
        let f = params.evaluate(&x);
        assert!((f[0] - 0.5f64.sqrt()).abs() < 1e-12);
        assert!((f[1] - 100.0 * 0.5f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn mop3_shares_distance() {
        let params = mop("mop3");
        let x = vec![0.4, 0.3, -0.2, 0.9, -0.8, 0.1, 0.5];
        let f = params.evaluate(&x);
        let (h, _) = params.position_value(&x[..1]);
        let d1 = f[0] / params.w[0] - h[0];
        let d2 = f[1] / params.w[1] - h[1];
        assert!((d1 - d2).abs() < 1e-12);
        assert!(d1 > 0.0);
    }

    #[test]
    #[should_panic]
    fn out_of_box_input_panics() {
        let params = mop("mop1");
        params.evaluate(&[1.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn validation_rejects_bad_rows() {
        let base = mop("mop7");
        let cases: Vec<GeneratorParams> = vec![
            GeneratorParams { c_dis: None, ..base.clone() },
            GeneratorParams { gamma: 0.0, ..base.clone() },
            GeneratorParams { gamma: 1.5, ..base.clone() },
            GeneratorParams { c_pos: vec![0.7, 0.7], ..base.clone() },
            GeneratorParams { w: vec![1.0, -1.0], ..base.clone() },
            GeneratorParams { s: 7, ..base.clone() },
            GeneratorParams { theta: vec![vec![1.0, -0.1], vec![0.0, 1.0]], ..base.clone() },
        ];
        for c in cases {
            assert!(matches!(c.validate(), Err(Error::InvalidParams(_))), "{c:?}");
        }
    }

    #[test]
    fn problem_reports_analytic_ideal_and_nadir() {
        let p = BiasedProblem::named("mop1").unwrap();
        assert_eq!(p.ideal(), Some(vec![0.0, 0.0]));
        assert_eq!(p.nadir(), Some(vec![1.0, 100.0]));
        assert!(BiasedProblem::named("nope").is_err());
    }
}
