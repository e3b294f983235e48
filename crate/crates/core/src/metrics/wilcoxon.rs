//! Two-sided Wilcoxon rank-sum test with the normal approximation.

use std::fmt;

use statrs::distribution::{ContinuousCDF, Normal};

/// Whether smaller or larger values are better.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

/// Outcome of comparing a sample against a reference sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Better,
    Comparable,
    Worse,
}

impl Verdict {
    pub fn symbol(self) -> &'static str {
        match self {
            Verdict::Better => "+",
            Verdict::Comparable => "=",
            Verdict::Worse => "-",
        }
    }

    pub fn flipped(self) -> Verdict {
        match self {
            Verdict::Better => Verdict::Worse,
            Verdict::Comparable => Verdict::Comparable,
            Verdict::Worse => Verdict::Better,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankSumTest {
    /// Rank sum of the first sample.
    pub statistic: f64,
    pub z: f64,
    pub p_value: f64,
}

/// Average ranks (1-based) of `values`, ties receiving their midrank.
pub fn midranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let rank = (i + j) as f64 / 2.0 + 1.0;
        for &k in &order[i..=j] {
            ranks[k] = rank;
        }
        i = j + 1;
    }
    ranks
}

/// Rank-sum statistic, tie-corrected normal score with continuity correction
/// and two-sided p-value.
pub fn rank_sum_test(a: &[f64], b: &[f64]) -> RankSumTest {
    let (n1, n2) = (a.len() as f64, b.len() as f64);
    let all: Vec<f64> = a.iter().chain(b).copied().collect();
    let ranks = midranks(&all);
    let statistic: f64 = ranks[..a.len()].iter().sum();
    let n = n1 + n2;
    let mean = n1 * (n + 1.0) / 2.0;

    let mut sorted = all.clone();
    sorted.sort_by(f64::total_cmp);
    let mut ties = 0.0;
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j + 1 < sorted.len() && sorted[j + 1] == sorted[i] {
            j += 1;
        }
        let t = (j - i + 1) as f64;
        ties += t * t * t - t;
        i = j + 1;
    }
    let var = n1 * n2 / 12.0 * ((n + 1.0) - ties / (n * (n - 1.0)));
    if var <= 0.0 {
        return RankSumTest { statistic, z: 0.0, p_value: 1.0 };
    }
    let diff = statistic - mean;
    let corrected = (diff.abs() - 0.5).max(0.0) * diff.signum();
    let z = corrected / var.sqrt();
    let normal = Normal::standard();
    let p_value = (2.0 * normal.sf(z.abs())).min(1.0);
    RankSumTest { statistic, z, p_value }
}

/// Verdict for sample `a` against reference sample `b` at level `alpha`.
/// Panics when either sample has fewer than five values.
pub fn wilcoxon_rank_sum(a: &[f64], b: &[f64], alpha: f64, sense: Sense) -> Verdict {
    assert!(a.len() >= 5 && b.len() >= 5, "rank-sum test needs at least five values per sample");
    let test = rank_sum_test(a, b);
    if test.p_value >= alpha {
        return Verdict::Comparable;
    }
    // positive z: `a` ranks higher, i.e. has larger values
    let a_larger = test.z > 0.0;
    match (sense, a_larger) {
        (Sense::Minimize, false) | (Sense::Maximize, true) => Verdict::Better,
        _ => Verdict::Worse,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn midrank_examples() {
        assert_eq!(midranks(&[3.0, 1.0, 2.0]), vec![3.0, 1.0, 2.0]);
        assert_eq!(midranks(&[1.0, 2.0, 2.0, 3.0]), vec![1.0, 2.5, 2.5, 4.0]);
    }

    #[test]
    fn identical_samples_are_comparable() {
        let a: Vec<f64> = (0..10).map(|k| k as f64).collect();
        assert_eq!(wilcoxon_rank_sum(&a, &a, 0.05, Sense::Minimize), Verdict::Comparable);
        let tied = vec![1.0; 8];
        assert_eq!(wilcoxon_rank_sum(&tied, &tied, 0.05, Sense::Minimize), Verdict::Comparable);
    }

    #[test]
    fn separated_samples_are_significant() {
        let a: Vec<f64> = (1..=30).map(f64::from).collect();
        let b: Vec<f64> = (31..=60).map(f64::from).collect();
        let t = rank_sum_test(&a, &b);
        assert_eq!(t.statistic, 465.0);
        assert!(t.p_value < 1e-9);
        assert_eq!(wilcoxon_rank_sum(&a, &b, 0.05, Sense::Minimize), Verdict::Better);
        assert_eq!(wilcoxon_rank_sum(&a, &b, 0.05, Sense::Maximize), Verdict::Worse);
        assert_eq!(wilcoxon_rank_sum(&b, &a, 0.05, Sense::Minimize), Verdict::Worse);
    }

    #[test]
    fn small_known_case() {
        // exact rank sum of a = 1 + 2 + 3 + 4 + 6 = 16 with n1 = n2 = 5
        let a = [1.0, 2.0, 3.0, 4.0, 6.0];
        let b = [5.0, 7.0, 8.0, 9.0, 10.0];
        let t = rank_sum_test(&a, &b);
        assert_eq!(t.statistic, 16.0);
        // mean 27.5, variance 22.9167, corrected |diff| 11
        assert!((t.z + 11.0 / (25.0f64 * 11.0 / 12.0).sqrt()).abs() < 1e-12);
    }
}
