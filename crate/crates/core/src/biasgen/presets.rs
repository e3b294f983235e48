//! The sixteen named instances and their inverted variants.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::distance::DistanceShape;
use super::GeneratorParams;
use crate::{Error, Result};

/// Name of a preset instance: `mop1`..`mop16`, or `mop11-inv`..`mop16-inv`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PresetId {
    number: u8,
    inverted: bool,
}

impl PresetId {
    pub fn new(number: u8, inverted: bool) -> Result<Self> {
        let valid = (1..=16).contains(&number) && (!inverted || number >= 11);
        if !valid {
            let name = if inverted { format!("mop{number}-inv") } else { format!("mop{number}") };
            return Err(Error::UnknownProblem(name));
        }
        Ok(PresetId { number, inverted })
    }

    pub fn number(&self) -> u8 {
        self.number
    }

    pub fn inverted(&self) -> bool {
        self.inverted
    }

    /// All 22 preset ids in listing order.
    pub fn all() -> Vec<PresetId> {
        let mut ids: Vec<PresetId> = (1..=16).map(|k| PresetId { number: k, inverted: false }).collect();
        ids.extend((11..=16).map(|k| PresetId { number: k, inverted: true }));
        ids
    }

    pub fn params(&self) -> GeneratorParams {
        preset(*self)
    }
}

impl fmt::Display for PresetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverted {
            write!(f, "mop{}-inv", self.number)
        } else {
            write!(f, "mop{}", self.number)
        }
    }
}

impl FromStr for PresetId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let unknown = || Error::UnknownProblem(s.to_string());
        let body = lower.strip_prefix("mop").ok_or_else(unknown)?;
        let (digits, inverted) = match body.strip_suffix("-inv") {
            Some(d) => (d, true),
            None => (body, false),
        };
        let number: u8 = digits.parse().map_err(|_| unknown())?;
        PresetId::new(number, inverted).map_err(|_| unknown())
    }
}

impl Serialize for PresetId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PresetId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn ident(m: usize) -> Vec<Vec<f64>> {
    (0..m).map(|i| (0..m).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect()
}

fn full(m: usize, v: f64) -> Vec<Vec<f64>> {
    vec![vec![v; m]; m]
}

fn scales(m: usize) -> Vec<f64> {
    (0..m).map(|i| 10f64.powi(2 * i as i32)).collect()
}

#[allow(clippy::too_many_arguments)]
fn row(
    s: usize,
    p: &[f64],
    c_pos: &[f64],
    gamma: f64,
    theta: Vec<Vec<f64>>,
    a: [f64; 5],
    c_dis: Option<&[f64]>,
) -> GeneratorParams {
    let m = p.len();
    GeneratorParams {
        m,
        n: if m == 2 { 7 } else { 11 },
        s,
        p: p.to_vec(),
        c_pos: c_pos.to_vec(),
        gamma,
        theta,
        shape: DistanceShape { a1: a[0], a2: a[1], a3: a[2], a4: a[3], a5: a[4] },
        c_dis: c_dis.map(<[f64]>::to_vec),
        w: scales(m),
        inverted: false,
    }
}

/// Parameter row of a preset.
pub fn preset(id: PresetId) -> GeneratorParams {
    let third = [0.33, 0.33, 0.33];
    let mixed3 = vec![vec![0.6, 0.2, 0.2], vec![0.2, 0.6, 0.2], vec![0.2, 0.2, 0.6]];
    let shared2 = full(2, 0.5);
    let lean2 = vec![vec![0.8, 0.2], vec![0.2, 0.8]];
    let mut params = match id.number {
        1 => row(5, &[1.0, 1.0], &[0.1, 0.9], 0.1, ident(2), [1.0, 0.0, 1.0, 0.0, 0.0], None),
        2 => row(5, &[0.5, 0.5], &[0.5, 0.5], 0.2, ident(2), [1.0, 0.0, 2.0, 0.0, 0.0], None),
        3 => row(1, &[1.0, 1.0], &[0.3, 0.7], 1.0, shared2, [12.0, 0.0, 0.1, 0.0, 0.0], None),
        4 => row(
            1,
            &[0.5, 2.0],
            &[0.3, 0.7],
            1.0,
            vec![vec![0.0, 0.0], vec![0.5, 0.5]],
            [6.0, 0.0, 0.1, 0.0, 0.0],
            None,
        ),
        5 => row(1, &[2.0, 2.0], &[0.5, 0.5], 0.1, shared2, [6.0, 0.0, 0.25, 0.0, 0.0], None),
        6 => row(1, &[0.5, 0.5], &[0.9, 0.1], 0.2, lean2, [3.0, 0.0, 0.5, 0.0, 0.0], None),
        7 => row(1, &[2.0, 2.0], &[0.0, 1.0], 1.0, shared2, [6.0, 4.0, 2.0, 4.0, 3.0], Some(&[0.5, 0.5])),
        8 => row(1, &[0.5, 2.0], &[0.0, 1.0], 1.0, lean2, [12.0, 1.0, 2.0, 1.0, 3.0], Some(&[0.0, 1.0])),
        9 => row(
            1,
            &[2.0, 2.0],
            &[0.5, 0.5],
            0.2,
            vec![vec![0.8, 0.2], vec![0.8, 0.2]],
            [6.0, 1.0, 2.0, 1.0, 3.0],
            Some(&[0.5, 0.5]),
        ),
        10 => row(1, &[0.5, 2.0], &[0.0, 1.0], 0.1, ident(2), [3.0, 2.0, 0.8, 2.0, 0.0], Some(&[0.0, 1.0])),
        11 => row(2, &[2.0, 2.0, 0.5], &[0.2, 0.2, 0.6], 1.0, full(3, 0.33), [12.0, 0.0, 0.1, 0.0, 0.0], None),
        12 => row(2, &[0.5, 0.5, 0.5], &third, 0.2, mixed3, [6.0, 0.0, 0.5, 0.0, 0.0], None),
        13 => row(2, &[2.0, 2.0, 2.0], &[0.0, 0.0, 1.0], 1.0, full(3, 0.33), [6.0, 4.0, 2.0, 4.0, 3.0], Some(&third)),
        14 => row(2, &[0.5, 0.5, 2.0], &[0.0, 0.0, 1.0], 1.0, mixed3, [12.0, 1.0, 2.0, 1.0, 3.0], Some(&third)),
        15 => row(
            2,
            &[2.0, 2.0, 2.0],
            &third,
            0.2,
            vec![vec![0.7, 0.2, 0.1], vec![0.1, 0.7, 0.2], vec![0.2, 0.1, 0.7]],
            [6.0, 1.0, 2.0, 1.0, 3.0],
            Some(&third),
        ),
        16 => row(
            2,
            &[0.5, 0.5, 2.0],
            &[0.0, 0.0, 1.0],
            0.1,
            ident(3),
            [3.0, 2.0, 0.8, 2.0, 0.0],
            Some(&[0.0, 0.0, 1.0]),
        ),
        _ => unreachable!("PresetId guarantees 1..=16"),
    };
    params.inverted = id.inverted;
    params
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in PresetId::all() {
            let parsed: PresetId = id.to_string().parse().unwrap();
            assert_eq!(parsed, id);
        }
        assert_eq!(PresetId::all().len(), 22);
    }

    #[test]
    fn unknown_names_are_rejected() {
        for bad in ["mop0", "mop17", "mop3-inv", "zdt1", "mop", "mop1x"] {
            assert!(matches!(bad.parse::<PresetId>(), Err(Error::UnknownProblem(_))), "{bad}");
        }
    }

    #[test]
    fn every_preset_validates() {
        for id in PresetId::all() {
            id.params().validate().unwrap_or_else(|e| panic!("{id}: {e}"));
        }
    }

    #[test]
    fn mop1_row() {
        let p = preset("mop1".parse().unwrap());
        assert_eq!((p.m, p.n, p.s), (2, 7, 5));
        assert_eq!(p.p, vec![1.0, 1.0]);
        assert_eq!(p.c_pos, vec![0.1, 0.9]);
        assert_eq!(p.gamma, 0.1);
        assert_eq!(p.theta, ident(2));
        assert_eq!(p.shape, DistanceShape { a1: 1.0, a2: 0.0, a3: 1.0, a4: 0.0, a5: 0.0 });
        assert_eq!(p.c_dis, None);
        assert_eq!(p.w, vec![1.0, 100.0]);
        assert!(!p.inverted);
    }

    #[test]
    fn mop16_row() {
        let p = preset("mop16".parse().unwrap());
        assert_eq!((p.m, p.n, p.s), (3, 11, 2));
        assert_eq!(p.p, vec![0.5, 0.5, 2.0]);
        assert_eq!(p.c_pos, vec![0.0, 0.0, 1.0]);
        assert_eq!(p.gamma, 0.1);
        assert_eq!(p.theta, ident(3));
        assert_eq!(p.shape, DistanceShape { a1: 3.0, a2: 2.0, a3: 0.8, a4: 2.0, a5: 0.0 });
        assert_eq!(p.c_dis, Some(vec![0.0, 0.0, 1.0]));
        assert_eq!(p.w, vec![1.0, 100.0, 10000.0]);
    }

    #[test]
    fn inverted_variant_only_flips_the_flag() {
        let base = preset("mop12".parse().unwrap());
        let inv = preset("mop12-inv".parse().unwrap());
        assert!(inv.inverted);
        assert_eq!(GeneratorParams { inverted: false, ..inv }, base);
    }
}
