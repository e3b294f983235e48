//! Distance function: how far an objective vector sits above the front,
//! with an optional position-dependent weight and Pareto set curvature.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

/// Rows are unit normals to the facets of the unit simplex in `R^m`.
fn normals(m: usize) -> Vec<Vec<f64>> {
    let mf = m as f64;
    let diag = -((mf - 1.0) / mf).sqrt();
    let off = 1.0 / (mf * (mf - 1.0)).sqrt();
    (0..m)
        .map(|i| (0..m).map(|j| if i == j { diag } else { off }).collect())
        .collect()
}

fn facet_distance(n: &[Vec<f64>], y: &[f64], c: &[f64]) -> f64 {
    n.iter()
        .map(|row| row.iter().zip(y.iter().zip(c)).map(|(a, (yi, ci))| a * (yi - ci)).sum::<f64>())
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Relative distance of a simplex point `y` from the center `c_dis`,
/// scaled so the farthest simplex vertex has ratio one.
pub fn distance_ratio(y: &[f64], c_dis: &[f64]) -> f64 {
    let m = y.len();
    assert_eq!(m, c_dis.len(), "simplex point and center differ in length");
    let n = normals(m);
    let r = facet_distance(&n, y, c_dis);
    let r0 = (0..m)
        .map(|i| {
            let mut e = vec![0.0; m];
            e[i] = 1.0;
            facet_distance(&n, &e, c_dis)
        })
        .fold(f64::NEG_INFINITY, f64::max);
    (r / r0).clamp(0.0, 1.0)
}

/// Position-dependent scale `sin(pi/2 * ell^(m-1))^beta`. A zero exponent
/// disables the term entirely, including at `ell = 0`.
pub fn scale_b(ell: f64, beta: f64, m: usize) -> f64 {
    if beta == 0.0 {
        return 1.0;
    }
    (PI / 2.0 * ell.powi(m as i32 - 1)).sin().max(0.0).powf(beta)
}

/// Shape parameters of the distance function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistanceShape {
    /// Weight of the position-dependent multiplier.
    pub a1: f64,
    /// Pareto set scaling exponent.
    pub a2: f64,
    /// Distance bias exponent.
    pub a3: f64,
    /// Position bias exponent of the multiplier.
    pub a4: f64,
    /// Pareto set curvature.
    pub a5: f64,
}

/// Pareto set value of distance variable `j` (1-based index over all `n`
/// variables) for a given distance ratio.
pub fn pareto_set_value(j: usize, n: usize, ell: f64, shape: &DistanceShape, m: usize) -> f64 {
    let phase = (n as f64 + 2.0) * j as f64 * PI / (2.0 * n as f64);
    0.9 * scale_b(ell, shape.a2, m) * (shape.a5 * PI * ell + phase).cos()
}

/// Raw distance values `g'` for each objective. `x` is the full decision
/// vector, `s` the number of position variables and `ell` the distance
/// ratio of its simplex image.
pub fn distance_values(x: &[f64], s: usize, m: usize, ell: f64, shape: &DistanceShape) -> Vec<f64> {
    let n = x.len();
    let weight = shape.a1 * scale_b(ell, shape.a4, m) + 1.0;
    (0..m)
        .map(|i| {
            let (sum, count) = ((s + i)..n).step_by(m).fold((0.0, 0usize), |(acc, c), k| {
                let t = x[k] - pareto_set_value(k + 1, n, ell, shape, m);
                (acc + t.abs().powf(shape.a3), c + 1)
            });
            if count == 0 {
                0.0
            } else {
                weight * sum / count as f64
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_examples() {
        let c = [0.5, 0.5];
        assert_eq!(distance_ratio(&c, &c), 0.0);
        assert!((distance_ratio(&[1.0, 0.0], &c) - 1.0).abs() < 1e-12);
        assert!((distance_ratio(&[0.75, 0.25], &c) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn ratio_reaches_one_at_farthest_vertex() {
        let c = [0.2, 0.3, 0.5];
        let best = (0..3)
            .map(|i| {
                let mut e = vec![0.0; 3];
                e[i] = 1.0;
                distance_ratio(&e, &c)
            })
            .fold(0.0, f64::max);
        assert!((best - 1.0).abs() < 1e-12);
    }

    #[test]
    fn scale_examples() {
        assert_eq!(scale_b(0.0, 1.0, 2), 0.0);
        assert!((scale_b(1.0, 1.0, 2) - 1.0).abs() < 1e-15);
        assert!((scale_b(0.5, 1.0, 2) - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert_eq!(scale_b(0.0, 0.0, 2), 1.0);
    }
}
