//! Hypervolume of two- and three-objective point sets.

use rand::Rng;

use crate::moo::componentwise_min;

/// Points strictly better than `reference` in every objective.
fn effective<'a, V: AsRef<[f64]>>(front: &'a [V], reference: &[f64]) -> Vec<&'a [f64]> {
    front
        .iter()
        .map(|p| p.as_ref())
        .filter(|p| {
            assert_eq!(p.len(), reference.len(), "point and reference differ in length");
            p.iter().zip(reference).all(|(v, r)| v < r)
        })
        .collect()
}

fn hv2(points: &[[f64; 2]], reference: [f64; 2]) -> f64 {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    let mut area = 0.0;
    let mut level = reference[1];
    for p in pts {
        if p[1] < level {
            area += (reference[0] - p[0]) * (level - p[1]);
            level = p[1];
        }
    }
    area
}

/// Non-dominated 2-D staircase kept sorted by ascending first coordinate
/// (and so by descending second coordinate).
#[derive(Default)]
struct Staircase {
    steps: Vec<[f64; 2]>,
}

impl Staircase {
    /// Inserts `p` unless it is weakly dominated; returns whether it was.
    fn insert(&mut self, p: [f64; 2]) -> bool {
        let pos = self.steps.partition_point(|q| q[0] <= p[0]);
        if pos > 0 && self.steps[pos - 1][1] <= p[1] {
            return false;
        }
        let mut end = pos;
        while end < self.steps.len() && self.steps[end][1] >= p[1] {
            end += 1;
        }
        // an equal first coordinate with a larger second one is dominated too
        let mut start = pos;
        while start > 0 && self.steps[start - 1][0] == p[0] {
            start -= 1;
        }
        self.steps.splice(start..end, std::iter::once(p));
        true
    }

    fn area(&self, reference: [f64; 2]) -> f64 {
        let mut area = 0.0;
        let mut level = reference[1];
        for q in &self.steps {
            area += (reference[0] - q[0]) * (level - q[1]);
            level = q[1];
        }
        area
    }
}

fn hv3(points: &[[f64; 3]], reference: [f64; 3]) -> f64 {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a[2].total_cmp(&b[2]));
    let mut stairs = Staircase::default();
    let mut volume = 0.0;
    let mut area = 0.0;
    for (k, p) in pts.iter().enumerate() {
        if stairs.insert([p[0], p[1]]) {
            area = stairs.area([reference[0], reference[1]]);
        }
        let next = pts.get(k + 1).map_or(reference[2], |q| q[2]);
        volume += area * (next - p[2]);
    }
    volume
}

/// Exact hypervolume dominated by `front` and bounded by `reference`, for
/// two or three objectives. Points that do not strictly dominate the
/// reference are ignored.
pub fn hv_exact<V: AsRef<[f64]>>(front: &[V], reference: &[f64]) -> f64 {
    let pts = effective(front, reference);
    if pts.is_empty() {
        return 0.0;
    }
    match reference.len() {
        1 => reference[0] - pts.iter().map(|p| p[0]).fold(f64::INFINITY, f64::min),
        2 => {
            let p2: Vec<[f64; 2]> = pts.iter().map(|p| [p[0], p[1]]).collect();
            hv2(&p2, [reference[0], reference[1]])
        }
        3 => {
            let p3: Vec<[f64; 3]> = pts.iter().map(|p| [p[0], p[1], p[2]]).collect();
            hv3(&p3, [reference[0], reference[1], reference[2]])
        }
        m => panic!("exact hypervolume supports at most three objectives, got {m}"),
    }
}

/// Exclusive contribution of every point: the volume lost when it alone is
/// removed.
pub fn hv_contributions<V: AsRef<[f64]>>(front: &[V], reference: &[f64]) -> Vec<f64> {
    let all: Vec<&[f64]> = front.iter().map(|p| p.as_ref()).collect();
    if reference.len() == 2 {
        return contributions2(&all, reference);
    }
    let total = hv_exact(&all, reference);
    (0..all.len())
        .map(|k| {
            let rest: Vec<&[f64]> = all.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, p)| *p).collect();
            (total - hv_exact(&rest, reference)).max(0.0)
        })
        .collect()
}

fn contributions2(front: &[&[f64]], reference: &[f64]) -> Vec<f64> {
    let inside: Vec<bool> = front.iter().map(|p| p[0] < reference[0] && p[1] < reference[1]).collect();
    (0..front.len())
        .map(|k| {
            let s = front[k];
            if !inside[k] {
                return 0.0;
            }
            // the box of `s` is cut to the right by points at or below it and
            // from above by points at or left of it
            let (mut right, mut top) = (reference[0], reference[1]);
            for (j, q) in front.iter().enumerate() {
                if j == k || !inside[j] {
                    continue;
                }
                if q[0] <= s[0] && q[1] <= s[1] {
                    return 0.0;
                }
                if q[0] > s[0] && q[1] > s[1] {
                    return exclusive_by_removal(front, k, reference);
                }
                if q[1] <= s[1] {
                    right = right.min(q[0]);
                }
                if q[0] <= s[0] {
                    top = top.min(q[1]);
                }
            }
            (right - s[0]) * (top - s[1])
        })
        .collect()
}

fn exclusive_by_removal(front: &[&[f64]], k: usize, reference: &[f64]) -> f64 {
    let rest: Vec<&[f64]> = front.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, p)| *p).collect();
    (hv_exact(front, reference) - hv_exact(&rest, reference)).max(0.0)
}

/// Monte Carlo estimate of the hypervolume and its standard error, sampling
/// uniformly in the box between the componentwise minimum and `reference`.
pub fn hv_monte_carlo<V: AsRef<[f64]>, R: Rng + ?Sized>(
    front: &[V],
    reference: &[f64],
    samples: usize,
    rng: &mut R,
) -> (f64, f64) {
    let pts = effective(front, reference);
    if pts.is_empty() || samples == 0 {
        return (0.0, 0.0);
    }
    let lo = componentwise_min(&pts);
    let volume: f64 = lo.iter().zip(reference).map(|(l, r)| r - l).product();
    let mut u = vec![0.0; reference.len()];
    let mut hits = 0usize;
    for _ in 0..samples {
        for (j, v) in u.iter_mut().enumerate() {
            *v = lo[j] + (reference[j] - lo[j]) * rng.random::<f64>();
        }
        if pts.iter().any(|p| p.iter().zip(&u).all(|(a, b)| a <= b)) {
            hits += 1;
        }
    }
    let frac = hits as f64 / samples as f64;
    let se = (frac * (1.0 - frac) / samples as f64).sqrt() * volume;
    (frac * volume, se)
}

/// Reference coordinate used after normalizing by the true ideal and nadir.
pub const NORMALIZED_REFERENCE: f64 = 1.1;

/// Hypervolume of `pop` after mapping `ideal -> 0` and `nadir -> 1`, with
/// reference point `1.1` in every objective.
pub fn hv_normalized<V: AsRef<[f64]>>(pop: &[V], ideal: &[f64], nadir: &[f64]) -> f64 {
    let scaled: Vec<Vec<f64>> = pop
        .iter()
        .map(|p| {
            p.as_ref()
                .iter()
                .zip(ideal.iter().zip(nadir))
                .map(|(v, (lo, hi))| (v - lo) / (hi - lo))
                .collect()
        })
        .collect();
    hv_exact(&scaled, &vec![NORMALIZED_REFERENCE; ideal.len()])
}
