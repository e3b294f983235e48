//! Shared multi-objective vocabulary: vectors, solutions, box bounds,
//! Pareto dominance and the seeded random source.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A point in decision space.
pub type DecisionVector = Vec<f64>;

/// A point in objective space (minimization).
pub type ObjectiveVector = Vec<f64>;

/// The random generator used everywhere. ChaCha8 has a fixed, documented
/// output stream, so a seed reproduces the same draws on every platform.
pub type RandomSource = ChaCha8Rng;

/// Creates the random source for one run.
pub fn random_source(seed: u64) -> RandomSource {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A decision vector together with its cached objective vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub x: DecisionVector,
    pub f: ObjectiveVector,
}

impl Solution {
    pub fn new(x: DecisionVector, f: ObjectiveVector) -> Self {
        Solution { x, f }
    }

    /// Evaluates `x` on `problem` and caches the result.
    pub fn evaluate(problem: &dyn Problem, x: DecisionVector) -> Self {
        let f = problem.evaluate(&x);
        Solution { x, f }
    }
}

/// Axis-aligned box `[lower, upper]`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxBounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl BoxBounds {
    /// Panics unless the vectors have equal length and `lower[i] < upper[i]`.
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Self {
        assert_eq!(lower.len(), upper.len(), "bound vectors differ in length");
        assert!(
            lower.iter().zip(&upper).all(|(l, u)| l < u),
            "every lower bound must be strictly below its upper bound"
        );
        BoxBounds { lower, upper }
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x
                .iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (l, u))| *v >= *l && *v <= *u)
    }

    /// Projects `x` into the box in place.
    pub fn clamp_in_place(&self, x: &mut [f64]) {
        assert_eq!(x.len(), self.dim(), "vector length does not match bounds");
        for (v, (l, u)) in x.iter_mut().zip(self.lower.iter().zip(&self.upper)) {
            *v = v.clamp(*l, *u);
        }
    }

    /// Uniform sample from the box.
    pub fn sample_uniform<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> DecisionVector {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(l, u)| l + (u - l) * rng.random::<f64>())
            .collect()
    }
}

/// Projects each component of `x` into `[lower_i, upper_i]`.
pub fn clamp_to_bounds(x: &[f64], bounds: &BoxBounds) -> DecisionVector {
    let mut out = x.to_vec();
    bounds.clamp_in_place(&mut out);
    out
}

/// A box-constrained multi-objective minimization problem.
pub trait Problem: Send + Sync {
    fn num_objectives(&self) -> usize;

    fn num_variables(&self) -> usize;

    fn bounds(&self) -> &BoxBounds;

    /// Deterministic, pure evaluation. Implementations may panic on
    /// vectors outside [`Problem::bounds`].
    fn evaluate(&self, x: &[f64]) -> ObjectiveVector;

    /// Analytic ideal objective vector, when known.
    fn ideal(&self) -> Option<ObjectiveVector> {
        None
    }

    /// Analytic nadir objective vector, when known.
    fn nadir(&self) -> Option<ObjectiveVector> {
        None
    }
}

/// `u` dominates `v`: no component worse and at least one strictly better.
pub fn dominates(u: &[f64], v: &[f64]) -> bool {
    assert_eq!(u.len(), v.len(), "objective vectors differ in length");
    let mut strictly = false;
    for (a, b) in u.iter().zip(v) {
        if a > b {
            return false;
        }
        if a < b {
            strictly = true;
        }
    }
    strictly
}

/// Indices of the members not dominated by any other member, in input order.
pub fn non_dominated_filter<V: AsRef<[f64]>>(points: &[V]) -> Vec<usize> {
    (0..points.len())
        .filter(|&i| {
            !points
                .iter()
                .enumerate()
                .any(|(j, q)| j != i && dominates(q.as_ref(), points[i].as_ref()))
        })
        .collect()
}

/// Fast non-dominated sorting. Returns the fronts as index lists, best first;
/// indices inside a front keep input order.
pub fn non_dominated_sort<V: AsRef<[f64]>>(points: &[V]) -> Vec<Vec<usize>> {
    let n = points.len();
    let mut dominated_by_count = vec![0usize; n];
    let mut dominates_list: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (points[i].as_ref(), points[j].as_ref());
            if dominates(a, b) {
                dominates_list[i].push(j);
                dominated_by_count[j] += 1;
            } else if dominates(b, a) {
                dominates_list[j].push(i);
                dominated_by_count[i] += 1;
            }
        }
    }
    let mut fronts = Vec::new();
    let mut current: Vec<usize> = (0..n).filter(|&i| dominated_by_count[i] == 0).collect();
    while !current.is_empty() {
        let mut next = Vec::new();
        for &i in &current {
            for &j in &dominates_list[i] {
                dominated_by_count[j] -= 1;
                if dominated_by_count[j] == 0 {
                    next.push(j);
                }
            }
        }
        next.sort_unstable();
        fronts.push(current);
        current = next;
    }
    fronts
}

/// Componentwise minimum of a non-empty set of vectors.
pub fn componentwise_min<V: AsRef<[f64]>>(points: &[V]) -> ObjectiveVector {
    assert!(!points.is_empty(), "componentwise minimum of an empty set");
    let mut out = points[0].as_ref().to_vec();
    for p in &points[1..] {
        for (o, v) in out.iter_mut().zip(p.as_ref()) {
            *o = o.min(*v);
        }
    }
    out
}

/// Componentwise maximum of a non-empty set of vectors.
pub fn componentwise_max<V: AsRef<[f64]>>(points: &[V]) -> ObjectiveVector {
    assert!(!points.is_empty(), "componentwise maximum of an empty set");
    let mut out = points[0].as_ref().to_vec();
    for p in &points[1..] {
        for (o, v) in out.iter_mut().zip(p.as_ref()) {
            *o = o.max(*v);
        }
    }
    out
}

/// Evaluations drawn from one shared budget. Every solution any component
/// evaluates during a trial goes through the same evaluator.
pub struct Evaluator<'a> {
    problem: &'a dyn Problem,
    used: usize,
    max: usize,
}

impl<'a> Evaluator<'a> {
    pub fn new(problem: &'a dyn Problem, max: usize) -> Self {
        Evaluator { problem, used: 0, max }
    }

    pub fn problem(&self) -> &'a dyn Problem {
        self.problem
    }

    pub fn used(&self) -> usize {
        self.used
    }

    pub fn max(&self) -> usize {
        self.max
    }

    pub fn remaining(&self) -> usize {
        self.max - self.used
    }

    pub fn exhausted(&self) -> bool {
        self.used >= self.max
    }

    /// Evaluates `x` unless the budget is spent. A non-finite objective
    /// value is an error.
    pub fn evaluate(&mut self, x: DecisionVector) -> crate::Result<Option<Solution>> {
        if self.exhausted() {
            return Ok(None);
        }
        let f = self.problem.evaluate(&x);
        self.used += 1;
        if f.iter().any(|v| !v.is_finite()) {
            return Err(crate::Error::NonFinite { evaluation: self.used, objectives: f });
        }
        Ok(Some(Solution { x, f }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn dominance_examples() {
        assert!(dominates(&[0.0, 0.0], &[1.0, 1.0]));
        assert!(!dominates(&[0.0, 1.0], &[1.0, 0.0]));
        assert!(!dominates(&[0.0, 0.0], &[0.0, 0.0]));
        assert!(dominates(&[0.0, 1.0], &[0.0, 2.0]));
    }

    #[test]
    #[should_panic]
    fn dominance_length_mismatch_panics() {
        dominates(&[0.0], &[0.0, 1.0]);
    }

    #[test]
    fn filter_examples() {
        let pts = vec![vec![0.0, 1.0], vec![1.0, 0.0], vec![1.0, 1.0]];
        assert_eq!(non_dominated_filter(&pts), vec![0, 1]);
        assert_eq!(non_dominated_filter(&[vec![0.0, 0.0]]), vec![0]);
    }

    #[test]
    fn clamp_examples() {
        let unit = BoxBounds::new(vec![0.0; 2], vec![1.0; 2]);
        assert_eq!(clamp_to_bounds(&[1.2, -0.5], &unit), vec![1.0, 0.0]);
        assert_eq!(clamp_to_bounds(&[0.3, 0.7], &unit), vec![0.3, 0.7]);
        let sym = BoxBounds::new(vec![-1.0; 2], vec![1.0; 2]);
        assert_eq!(clamp_to_bounds(&[-2.0, 3.0], &sym), vec![-1.0, 1.0]);
    }

    #[test]
    fn sort_partitions_every_index_once() {
        let mut rng = random_source(3);
        let pts: Vec<Vec<f64>> = (0..60)
            .map(|_| vec![rng.random::<f64>(), rng.random::<f64>()])
            .collect();
        let fronts = non_dominated_sort(&pts);
        let mut seen: Vec<usize> = fronts.iter().flatten().copied().collect();
        seen.sort_unstable();
        assert_eq!(seen, (0..60).collect::<Vec<_>>());
        assert_eq!(fronts[0], non_dominated_filter(&pts));
    }

    #[test]
    fn seeded_streams_repeat() {
        let a: Vec<u64> = (0..16).map({
            let mut r = random_source(42);
            move |_| r.random::<u64>()
        }).collect();
        let b: Vec<u64> = (0..16).map({
            let mut r = random_source(42);
            move |_| r.random::<u64>()
        }).collect();
        assert_eq!(a, b);
    }
}
