//! Per-cell statistics, rank-sum verdicts and text tables.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::format::sig6;
use super::output::{read_raw, RawRow, RAW_FILE};
use crate::metrics::{midranks, wilcoxon_rank_sum, Sense, Verdict};
use crate::Result;

/// Significance level of every verdict.
pub const SIGNIFICANCE: f64 = 0.05;
/// Fewer samples than this per side and no verdict is given.
pub const MIN_SAMPLES: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    pub mean: f64,
    pub std: f64,
    pub median: f64,
    pub count: usize,
}

impl Stats {
    pub fn of(values: &[f64]) -> Stats {
        let n = values.len();
        if n == 0 {
            return Stats { mean: f64::NAN, std: f64::NAN, median: f64::NAN, count: 0 };
        }
        let mean = values.iter().sum::<f64>() / n as f64;
        let std = if n > 1 {
            (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1) as f64).sqrt()
        } else {
            0.0
        };
        Stats { mean, std, median: median(values), count: n }
    }
}

pub fn median(values: &[f64]) -> f64 {
    if values.is_empty() {
        return f64::NAN;
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let k = v.len() / 2;
    if v.len() % 2 == 1 { v[k] } else { 0.5 * (v[k - 1] + v[k]) }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellSummary {
    pub problem: String,
    pub column: String,
    pub e: Stats,
    pub hv: Stats,
    pub eie_fe_fraction: f64,
    /// Against the reference column of the same problem; absent for the
    /// reference itself or with too few samples.
    pub e_verdict: Option<String>,
    pub hv_verdict: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub reference: String,
    pub problems: Vec<String>,
    pub columns: Vec<String>,
    pub cells: Vec<CellSummary>,
    /// Mean rank of each column's mean over the problems, 1 is best.
    pub e_average_rank: BTreeMap<String, f64>,
    pub hv_average_rank: BTreeMap<String, f64>,
    /// Counts of `+`, `=` and `-` per column.
    pub e_tally: BTreeMap<String, [usize; 3]>,
    pub hv_tally: BTreeMap<String, [usize; 3]>,
}

/// The column `column` is compared against. A bare estimator name means
/// the same host with that estimator.
pub fn reference_column(column: &str, reference: &str) -> String {
    if reference.contains('+') {
        return reference.to_string();
    }
    let host = column.split('+').next().unwrap_or(column);
    format!("{host}+{reference}")
}

fn verdict(a: &[f64], b: &[f64], sense: Sense) -> Option<Verdict> {
    (a.len() >= MIN_SAMPLES && b.len() >= MIN_SAMPLES).then(|| wilcoxon_rank_sum(a, b, SIGNIFICANCE, sense))
}

fn tally_index(v: Verdict) -> usize {
    match v {
        Verdict::Better => 0,
        Verdict::Comparable => 1,
        Verdict::Worse => 2,
    }
}

fn order_preserving<I: IntoIterator<Item = String>>(items: I) -> Vec<String> {
    let mut seen = BTreeSet::new();
    items.into_iter().filter(|s| seen.insert(s.clone())).collect()
}

impl Summary {
    pub fn from_rows(rows: &[RawRow], reference: &str) -> Summary {
        let problems = order_preserving(rows.iter().map(|r| r.problem.clone()));
        let columns = order_preserving(rows.iter().map(RawRow::column));
        let mut groups: BTreeMap<(String, String), Vec<&RawRow>> = BTreeMap::new();
        for r in rows {
            groups.entry((r.problem.clone(), r.column())).or_default().push(r);
        }
        let values = |p: &str, c: &str, pick: fn(&RawRow) -> f64| -> Vec<f64> {
            groups.get(&(p.to_string(), c.to_string())).map_or_else(Vec::new, |g| g.iter().map(|r| pick(r)).collect())
        };

        let mut cells = Vec::new();
        let mut e_tally: BTreeMap<String, [usize; 3]> = BTreeMap::new();
        let mut hv_tally: BTreeMap<String, [usize; 3]> = BTreeMap::new();
        for p in &problems {
            for c in &columns {
                if !groups.contains_key(&(p.clone(), c.clone())) {
                    continue;
                }
                let e = values(p, c, |r| r.e);
                let hv = values(p, c, |r| r.hv);
                let fraction = values(p, c, |r| r.eie_fe_fraction);
                let rc = reference_column(c, reference);
                let (mut ev, mut hvv) = (None, None);
                if rc != *c && groups.contains_key(&(p.clone(), rc.clone())) {
                    ev = verdict(&e, &values(p, &rc, |r| r.e), Sense::Minimize);
                    hvv = verdict(&hv, &values(p, &rc, |r| r.hv), Sense::Maximize);
                }
                if let Some(v) = ev {
                    e_tally.entry(c.clone()).or_default()[tally_index(v)] += 1;
                }
                if let Some(v) = hvv {
                    hv_tally.entry(c.clone()).or_default()[tally_index(v)] += 1;
                }
                cells.push(CellSummary {
                    problem: p.clone(),
                    column: c.clone(),
                    e: Stats::of(&e),
                    hv: Stats::of(&hv),
                    eie_fe_fraction: Stats::of(&fraction).mean,
                    e_verdict: ev.map(|v| v.symbol().to_string()),
                    hv_verdict: hvv.map(|v| v.symbol().to_string()),
                });
            }
        }

        let mut summary = Summary {
            reference: reference.to_string(),
            problems,
            columns,
            cells,
            e_average_rank: BTreeMap::new(),
            hv_average_rank: BTreeMap::new(),
            e_tally,
            hv_tally,
        };
        summary.e_average_rank = summary.average_ranks(|c| c.e.mean, Sense::Minimize);
        summary.hv_average_rank = summary.average_ranks(|c| c.hv.mean, Sense::Maximize);
        summary
    }

    pub fn cell(&self, problem: &str, column: &str) -> Option<&CellSummary> {
        self.cells.iter().find(|c| c.problem == problem && c.column == column)
    }

    fn average_ranks(&self, pick: fn(&CellSummary) -> f64, sense: Sense) -> BTreeMap<String, f64> {
        let mut totals: BTreeMap<String, (f64, usize)> = BTreeMap::new();
        for p in &self.problems {
            let cells: Vec<&CellSummary> = self.cells.iter().filter(|c| &c.problem == p).collect();
            let keys: Vec<f64> = cells
                .iter()
                .map(|c| {
                    let v = pick(c);
                    if sense == Sense::Maximize { -v } else { v }
                })
                .collect();
            for (c, r) in cells.iter().zip(midranks(&keys)) {
                let t = totals.entry(c.column.clone()).or_default();
                t.0 += r;
                t.1 += 1;
            }
        }
        totals.into_iter().map(|(k, (s, n))| (k, s / n as f64)).collect()
    }

    /// Two text tables, E then HV: `mean(std)` per cell with the verdict
    /// symbol, then the average rank and the `+/=/-` tally per column.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (title, metric) in [("E (lower is better)", 0), ("HV (higher is better)", 1)] {
            let _ = writeln!(out, "{title}, verdicts against {}", self.reference);
            let mut header = vec!["problem".to_string()];
            header.extend(self.columns.iter().cloned());
            let mut table = vec![header];
            for p in &self.problems {
                let mut row = vec![p.clone()];
                for c in &self.columns {
                    row.push(match self.cell(p, c) {
                        Some(cell) => {
                            let (s, v) = if metric == 0 { (&cell.e, &cell.e_verdict) } else { (&cell.hv, &cell.hv_verdict) };
                            format!("{}({}){}", sig6(s.mean), sig6(s.std), v.as_deref().map_or("", |v| v))
                        }
                        None => "-".into(),
                    });
                }
                table.push(row);
            }
            let (ranks, tally) = if metric == 0 { (&self.e_average_rank, &self.e_tally) } else { (&self.hv_average_rank, &self.hv_tally) };
            let mut row = vec!["avg rank".to_string()];
            row.extend(self.columns.iter().map(|c| ranks.get(c).map_or("-".into(), |r| format!("{r:.2}"))));
            table.push(row);
            let mut row = vec!["+/=/-".to_string()];
            row.extend(self.columns.iter().map(|c| tally.get(c).map_or("-".into(), |t| format!("{}/{}/{}", t[0], t[1], t[2]))));
            table.push(row);
            out.push_str(&layout(&table));
            out.push('\n');
        }
        out
    }
}

fn layout(table: &[Vec<String>]) -> String {
    let cols = table.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|j| table.iter().filter_map(|r| r.get(j)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in table {
        let line: Vec<String> = row.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    out
}

/// Summary of the `raw.csv` in `dir`.
pub fn summarize_dir(dir: &Path, reference: &str) -> Result<Summary> {
    Ok(Summary::from_rows(&read_raw(&dir.join(RAW_FILE))?, reference))
}

/// Text tables for the results in `dir`.
pub fn report(dir: &Path, reference: &str) -> Result<String> {
    Ok(summarize_dir(dir, reference)?.render())
}
