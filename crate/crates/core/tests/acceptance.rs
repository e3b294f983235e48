//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero when a criterion outside `EXPECTED_RED` fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use eie::bench::report::median;
use eie::bench::{run_cells, ProblemSpec, RunRecord, TrialConfig};
use eie::biasgen::{remap, sample_pareto_set, BiasedProblem, PresetId};
use eie::cmaes::{CmaProcedure, CmaSettings};
use eie::eie::{alpha_from_epsilon, EwsSubproblem};
use eie::hosts::{drp_beta, Estimator, EstimatorConfig, EstimatorKind, HostConfig, HostKind};
use eie::metrics::{hv_exact, hv_monte_carlo};
use eie::moo::{random_source, Evaluator};
use eie::{BoxBounds, Problem};
use rand::Rng;

// tolerances
const EWS_SAMPLES: usize = 100_000;
const EWS_SLACK: f64 = 1e-3;
const EWS_SECONDS: f64 = 10.0;
const GEN_PS_POINTS: usize = 1_000;
const GEN_RANDOM_POINTS: usize = 10_000;
const GEN_TOL: f64 = 1e-12;
const GEN_SECONDS: f64 = 30.0;
const REMAP_TOL: f64 = 1e-12;
const HV_SAMPLES: usize = 1_000_000;
const HV_FRONTS: usize = 20;
const HV_SIGMAS: f64 = 3.0;
const SPHERE_TARGET: f64 = 1e-8;
const SPHERE_BUDGET: usize = 10_000;
const DESK_SEEDS: u64 = 10;
const DESK_FE: usize = 50_000;
const DESK_E: f64 = 0.02;
const DESK_RATIO: f64 = 1.0 / 3.0;
const DESK_HV_WINS: usize = 3;
const STRESS_FE: usize = 300_000;
const STRESS_NEAR_ZERO: f64 = 0.05;
const STRESS_HV: f64 = 0.5;
const STRESS_WINS: usize = 8;

/// Criteria expected to fail at this budget; they still print FAIL.
const EXPECTED_RED: &[usize] = &[6];

struct Outcome {
    id: usize,
    pass: bool,
    detail: String,
}

fn outcome(id: usize, pass: bool, detail: String) -> Outcome {
    Outcome { id, pass, detail }
}

fn simplex_uniform(m: usize, count: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = random_source(seed);
    (0..count)
        .map(|_| {
            let e: Vec<f64> = (0..m).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
            let t: f64 = e.iter().sum();
            e.into_iter().map(|v| v / t).collect()
        })
        .collect()
}

fn ews_bound() -> Outcome {
    let start = Instant::now();
    let mut worst_excess = f64::NEG_INFINITY;
    for m in [2usize, 3] {
        let front = simplex_uniform(m, EWS_SAMPLES, 100 + m as u64);
        for eps in [0.005, 0.01, 0.05] {
            let alpha = alpha_from_epsilon(eps);
            assert!((alpha - eps / (1.0 + eps)).abs() < 1e-15);
            for i in 0..m {
                let sub = EwsSubproblem::new(i, alpha, m);
                let w: Vec<f64> = (0..m).map(|j| if j == i { 1.0 - alpha } else { alpha / (m - 1) as f64 }).collect();
                assert_eq!(sub.weights(), w);
                let best = front
                    .iter()
                    .min_by(|a, b| {
                        let fa: f64 = a.iter().zip(&w).map(|(x, y)| x * y).sum();
                        let fb: f64 = b.iter().zip(&w).map(|(x, y)| x * y).sum();
                        fa.total_cmp(&fb)
                    })
                    .unwrap();
                worst_excess = worst_excess.max(best[i] - eps);
                let lib = &front[eie::eie::ews_argmin(&front, &sub).unwrap()];
                assert_eq!(lib, best);
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        1,
        worst_excess <= EWS_SLACK && secs < EWS_SECONDS,
        format!("max(f_i - eps) = {worst_excess:.2e}, {secs:.1}s"),
    )
}

fn generator() -> Outcome {
    let start = Instant::now();
    let mut rng = random_source(2);
    let (mut worst_g, mut min_f, mut worst_pos) = (0.0f64, f64::INFINITY, 0.0f64);
    for id in PresetId::all() {
        let problem = BiasedProblem::from_preset(id);
        let params = problem.params();
        for x in sample_pareto_set(params, GEN_PS_POINTS, &mut rng) {
            for g in params.distance_values(&x) {
                worst_g = worst_g.max(g.abs());
            }
        }
        for _ in 0..GEN_RANDOM_POINTS {
            let x = problem.bounds().sample_uniform(&mut rng);
            min_f = problem.evaluate(&x).into_iter().fold(min_f, f64::min);
        }
        let mut linear = params.clone();
        linear.p = vec![1.0; params.m];
        let chat = linear.chat();
        let x_pos: Vec<f64> = (0..linear.s).map(|k| chat[k % (linear.m - 1)]).collect();
        let (h, y) = linear.position_value(&x_pos);
        let m = linear.m;
        let mut target = linear.c_pos.clone();
        target[m - 1] = 1.0 - target[..m - 1].iter().sum::<f64>();
        for k in 0..m {
            let want_h = if linear.inverted { 1.0 - target[k] } else { target[k] };
            worst_pos = worst_pos.max((y[k] - target[k]).abs()).max((h[k] - want_h).abs());
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        2,
        worst_g < GEN_TOL && min_f >= 0.0 && worst_pos < GEN_TOL && secs < GEN_SECONDS,
        format!("max g' = {worst_g:.1e}, min f = {min_f:.3e}, position error {worst_pos:.1e}, {secs:.1}s"),
    )
}

fn position_bias() -> Outcome {
    let (c, g) = (0.25, 0.1);
    let checks = [(0.125, 0.0), (0.625, 1.0), (0.0, 0.25), (1.0, 0.25)];
    let worst = checks.iter().map(|&(s, want)| (remap(s, c, g) - want).abs()).fold(0.0f64, f64::max);
    outcome(3, worst < REMAP_TOL, format!("max deviation {worst:.1e}"))
}

fn hv_equivalence() -> Outcome {
    let mut rng = random_source(4);
    let mut worst = 0.0f64;
    for m in [2usize, 3] {
        let reference = vec![1.1; m];
        for _ in 0..HV_FRONTS {
            let size = rng.random_range(3..=25);
            let front: Vec<Vec<f64>> = (0..size).map(|_| (0..m).map(|_| rng.random::<f64>()).collect()).collect();
            let exact = hv_exact(&front, &reference);
            let (mc, se) = hv_monte_carlo(&front, &reference, HV_SAMPLES, &mut rng);
            worst = worst.max((exact - mc).abs() / se.max(1e-300));
        }
    }
    outcome(4, worst <= HV_SIGMAS, format!("worst |exact - mc| = {worst:.2} standard errors"))
}

fn sphere() -> Outcome {
    let n = 7;
    let mut fes = Vec::new();
    let mut lambda_ok = true;
    for seed in 1..=5 {
        let bounds = BoxBounds::new(vec![-5.0; n], vec![5.0; n]);
        let mut cma = CmaProcedure::new(vec![1.0; n], 0.5, bounds, CmaSettings::default());
        let (lo, hi) = (cma.lambda_default(), 8 * cma.lambda_default());
        let mut rng = random_source(seed);
        let mut fe = 0;
        while cma.best_fitness() >= SPHERE_TARGET && fe < 4 * SPHERE_BUDGET {
            let xs = cma.ask(&mut rng);
            fe += xs.len();
            let scored: Vec<_> = xs.into_iter().map(|x| { let f = x.iter().map(|v| v * v).sum(); (x, f) }).collect();
            cma.tell(&scored, &[]);
            lambda_ok &= (lo..=hi).contains(&cma.lambda());
        }
        fes.push(if cma.best_fitness() < SPHERE_TARGET { fe as f64 } else { f64::INFINITY });
    }
    let med = median(&fes);
    outcome(5, med <= SPHERE_BUDGET as f64 && lambda_ok, format!("median evaluations {med}, lambda within bounds: {lambda_ok}"))
}

fn paired(problems: &[&str], host: HostKind, fe_max: usize) -> Vec<(String, Vec<RunRecord>, Vec<RunRecord>)> {
    let mut cells = Vec::new();
    for p in problems {
        for est in [EstimatorKind::RunningMin, EstimatorKind::Eie] {
            let mut c = TrialConfig::new(ProblemSpec::Preset(p.parse().unwrap()), host, est);
            c.fe_max = fe_max;
            cells.push(c);
        }
    }
    let seeds: Vec<u64> = (1..=DESK_SEEDS).collect();
    let res = run_cells(&cells, &seeds).expect("suite runs");
    assert!(res.failures.is_empty(), "trials failed: {:?}", res.failures.len());
    problems
        .iter()
        .map(|p| {
            let of = |e: &str| res.records.iter().filter(|r| r.problem == *p && r.estimator == e).cloned().collect();
            (p.to_string(), of("none"), of("eie"))
        })
        .collect()
}

fn med(rs: &[RunRecord], f: impl Fn(&RunRecord) -> f64) -> f64 {
    median(&rs.iter().map(f).collect::<Vec<_>>())
}

fn desk_reproduction() -> Outcome {
    let start = Instant::now();
    let rows = paired(&["mop1", "mop2", "mop4", "mop6"], HostKind::Moead, DESK_FE);
    let (mut e_ok, mut hv_wins) = (true, 0);
    let mut parts = Vec::new();
    for (p, none, with) in &rows {
        let (e0, e1) = (med(none, |r| r.e), med(with, |r| r.e));
        let (h0, h1) = (med(none, |r| r.hv), med(with, |r| r.hv));
        e_ok &= e1 < DESK_E && e1 <= DESK_RATIO * e0;
        hv_wins += (h1 > h0) as usize;
        parts.push(format!("{p} E {e0:.3e}->{e1:.3e} HV {h0:.3}->{h1:.3}"));
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(6, e_ok && hv_wins >= DESK_HV_WINS, format!("{}; HV wins {hv_wins}/4, {secs:.0}s", parts.join("; ")))
}

fn stress() -> Outcome {
    let start = Instant::now();
    let rows = paired(&["mop11"], HostKind::Nsga2, STRESS_FE);
    let (_, none, with) = &rows[0];
    let h0 = med(none, |r| r.hv);
    let wins = with.iter().filter(|r| r.hv > STRESS_HV).count();
    let secs = start.elapsed().as_secs_f64();
    outcome(
        7,
        h0 <= STRESS_NEAR_ZERO && wins >= STRESS_WINS,
        format!("median HV without {h0:.4}, seeds above {STRESS_HV} with: {wins}/{DESK_SEEDS}, {secs:.0}s"),
    )
}

fn baselines() -> Outcome {
    let floor = 1e-3;
    let fe_max = 12_000;
    let beta_end = drp_beta(fe_max, fe_max, floor);

    let problem = BiasedProblem::named("mop6").unwrap();
    let m = 2;
    let mut rng = random_source(8);
    let mut eval = Evaluator::new(&problem, fe_max);
    let host_cfg = HostConfig::new(HostKind::Nsga2, m);
    let init: Vec<_> =
        (0..host_cfg.population_size).map(|_| eval.evaluate(problem.bounds().sample_uniform(&mut rng)).unwrap().unwrap()).collect();
    let mut ut = Estimator::new(EstimatorConfig::new(EstimatorKind::Ut), m, fe_max);
    let mut drp = Estimator::new(EstimatorConfig::new(EstimatorKind::Drp), m, fe_max);
    ut.observe(&init, eval.used());
    drp.observe(&init, eval.used());
    let mut host = host_cfg.build(init, problem.bounds().clone());
    let (mut monotone, mut ut_err) = (true, 0.0f64);
    let mut prev = ut.running_min().to_vec();
    let mut seen: Vec<f64> = vec![f64::INFINITY; m];
    while !eval.exhausted() {
        let before = eval.used();
        let off = host.step(&[], &mut ut, &mut eval, &mut rng).unwrap();
        drp.observe(&off, eval.used());
        for s in host.population().iter().chain(&off) {
            for (z, v) in seen.iter_mut().zip(&s.f) {
                *z = z.min(*v);
            }
        }
        let z = ut.running_min().to_vec();
        monotone &= z.iter().zip(&prev).all(|(a, b)| a <= b);
        monotone &= z.iter().zip(&seen).all(|(a, b)| a <= b);
        prev = z.clone();
        let top: Vec<f64> = (0..m).map(|i| host.population().iter().map(|s| s.f[i]).fold(f64::NEG_INFINITY, f64::max)).collect();
        let want: Vec<f64> = (0..m).map(|i| z[i] - 0.1 * (top[i] - z[i])).collect();
        for (a, b) in ut.reference(host.population()).iter().zip(&want) {
            ut_err = ut_err.max((a - b).abs() / b.abs().max(1.0));
        }
        if eval.used() == before {
            break;
        }
    }
    let drp_end = drp.offset();
    let pass = beta_end == 1e-3 && drp_end == 1e-3 && ut_err < 1e-12 && monotone;
    outcome(8, pass, format!("DRP beta at budget {drp_end:e}, UT offset error {ut_err:.1e}, running min monotone: {monotone}"))
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_eie-bench");
    let tmp = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let out = tmp.path().join(name);
        let status = Command::new(bin)
            .args(["run", "--problem", "mop2,mop12", "--host", "moead,nsga2", "--estimator", "eie,ut", "--seeds", "1-2"])
            .args(["--fe-max", "4000", "--output"])
            .arg(&out)
            .output()
            .expect("binary runs");
        assert!(status.status.success(), "{}", String::from_utf8_lossy(&status.stderr));
        std::fs::read(out.join("raw.csv")).unwrap()
    };
    let (a, b) = (run("a"), run("b"));
    let rows = a.iter().filter(|&&c| c == b'\n').count().saturating_sub(1);
    outcome(9, a == b && rows == 16, format!("{rows} rows, identical: {}", a == b))
}

fn main() -> ExitCode {
    let outcomes = [
        ews_bound(),
        generator(),
        position_bias(),
        hv_equivalence(),
        sphere(),
        desk_reproduction(),
        stress(),
        baselines(),
        determinism(),
    ];
    let mut unexpected = 0;
    for o in &outcomes {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        let note = if !o.pass && EXPECTED_RED.contains(&o.id) { " (expected)" } else { "" };
        println!("criterion {} {tag}{note}: {}", o.id, o.detail);
        if !o.pass && !EXPECTED_RED.contains(&o.id) {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
