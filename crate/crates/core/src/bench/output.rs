//! CSV and JSON files written by a suite run.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::format::{parse_number, sig6};
use super::report::Summary;
use super::trial::RunRecord;
use crate::{Error, Result};

pub const RAW_FILE: &str = "raw.csv";
pub const TRAJECTORY_FILE: &str = "trajectory.csv";
pub const SUMMARY_FILE: &str = "summary.json";
pub const FAILURES_FILE: &str = "failures.csv";

/// One line of `raw.csv`.
#[derive(Debug, Clone, PartialEq)]
pub struct RawRow {
    pub problem: String,
    pub host: String,
    pub estimator: String,
    pub seed: u64,
    pub fe_max: usize,
    pub e: f64,
    pub hv: f64,
    pub eie_fe_fraction: f64,
}

impl RawRow {
    pub fn column(&self) -> String {
        format!("{}+{}", self.host, self.estimator)
    }
}

impl From<&RunRecord> for RawRow {
    fn from(r: &RunRecord) -> Self {
        RawRow {
            problem: r.problem.clone(),
            host: r.host.clone(),
            estimator: r.estimator.clone(),
            seed: r.seed,
            fe_max: r.fe_max,
            e: r.e,
            hv: r.hv,
            eie_fe_fraction: r.eie_fe_fraction,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RawCsv {
    problem: String,
    host: String,
    estimator: String,
    seed: u64,
    fe_max: usize,
    e: String,
    hv: String,
    eie_fe_fraction: String,
}

#[derive(Serialize, Deserialize)]
struct TrajectoryCsv {
    problem: String,
    host: String,
    estimator: String,
    seed: u64,
    fe: usize,
    e: String,
    hv: String,
}

#[derive(Serialize)]
struct FailureCsv<'a> {
    problem: &'a str,
    host: &'a str,
    estimator: &'a str,
    seed: u64,
    error: &'a str,
}

/// A trial that ended with an error.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub problem: String,
    pub host: String,
    pub estimator: String,
    pub seed: u64,
    pub error: String,
}

fn number(field: &str, s: &str) -> Result<f64> {
    parse_number(s).ok_or_else(|| Error::Config(format!("bad number `{s}` in column {field}")))
}

fn writer(path: &Path) -> Result<csv::Writer<fs::File>> {
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    Ok(csv::Writer::from_writer(file))
}

/// Writes `raw.csv`, `trajectory.csv`, `summary.json` and, when any trial
/// failed, `failures.csv`. Returns the paths written.
pub fn emit(dir: &Path, records: &[RunRecord], failures: &[Failure], reference: &str) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut written = Vec::new();

    let raw_path = dir.join(RAW_FILE);
    let rows: Vec<RawRow> = records.iter().map(RawRow::from).collect();
    write_raw(&raw_path, &rows)?;
    written.push(raw_path);

    let traj_path = dir.join(TRAJECTORY_FILE);
    let mut w = writer(&traj_path)?;
    for r in records {
        for s in &r.trajectory {
            w.serialize(TrajectoryCsv {
                problem: r.problem.clone(),
                host: r.host.clone(),
                estimator: r.estimator.clone(),
                seed: r.seed,
                fe: s.fe,
                e: sig6(s.e),
                hv: sig6(s.hv),
            })?;
        }
    }
    w.flush().map_err(|e| Error::io(&traj_path, e))?;
    written.push(traj_path);

    let summary = Summary::from_rows(&rows, reference);
    let summary_path = dir.join(SUMMARY_FILE);
    let json = serde_json::to_string_pretty(&summary)?;
    fs::write(&summary_path, json + "\n").map_err(|e| Error::io(&summary_path, e))?;
    written.push(summary_path);

    if !failures.is_empty() {
        let path = dir.join(FAILURES_FILE);
        let mut w = writer(&path)?;
        for f in failures {
            w.serialize(FailureCsv {
                problem: &f.problem,
                host: &f.host,
                estimator: &f.estimator,
                seed: f.seed,
                error: &f.error,
            })?;
        }
        w.flush().map_err(|e| Error::io(&path, e))?;
        written.push(path);
    }
    Ok(written)
}

pub fn write_raw(path: &Path, rows: &[RawRow]) -> Result<()> {
    let mut w = writer(path)?;
    for r in rows {
        w.serialize(RawCsv {
            problem: r.problem.clone(),
            host: r.host.clone(),
            estimator: r.estimator.clone(),
            seed: r.seed,
            fe_max: r.fe_max,
            e: sig6(r.e),
            hv: sig6(r.hv),
            eie_fe_fraction: sig6(r.eie_fe_fraction),
        })?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

pub fn read_raw(path: &Path) -> Result<Vec<RawRow>> {
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let mut out = Vec::new();
    for row in csv::Reader::from_reader(file).deserialize::<RawCsv>() {
        let r = row?;
        out.push(RawRow {
            e: number("e", &r.e)?,
            hv: number("hv", &r.hv)?,
            eie_fe_fraction: number("eie_fe_fraction", &r.eie_fe_fraction)?,
            problem: r.problem,
            host: r.host,
            estimator: r.estimator,
            seed: r.seed,
            fe_max: r.fe_max,
        });
    }
    Ok(out)
}

/// (problem, host, estimator, seed, fe, e, hv) rows of `trajectory.csv`.
pub fn read_trajectory(path: &Path) -> Result<Vec<(String, String, String, u64, usize, f64, f64)>> {
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let mut out = Vec::new();
    for row in csv::Reader::from_reader(file).deserialize::<TrajectoryCsv>() {
        let r = row?;
        out.push((r.problem, r.host, r.estimator, r.seed, r.fe, number("e", &r.e)?, number("hv", &r.hv)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::format::round6;

    #[test]
    fn raw_round_trip_is_exact_after_rounding() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join(RAW_FILE);
        let rows: Vec<RawRow> = (0..20)
            .map(|k| RawRow {
                problem: "mop1".into(),
                host: "moead".into(),
                estimator: "eie".into(),
                seed: k,
                fe_max: 50_000,
                e: round6((k as f64 + 0.123456789).powi(-3)),
                hv: round6(1.0 / (k as f64 + 3.0)),
                eie_fe_fraction: round6(0.3 + 1e-9 * k as f64),
            })
            .collect();
        write_raw(&path, &rows).unwrap();
        assert_eq!(read_raw(&path).unwrap(), rows);
        let text = fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("problem,host,estimator,seed,fe_max,e,hv,eie_fe_fraction\n"));
    }
}
