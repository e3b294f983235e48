use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use eie::bench::{emit, parse_seeds, report, run_suite, sig6, Protocol, SuiteConfig};
use eie::biasgen::{sample_pareto_front, sample_pareto_set, BiasedProblem, FrontSampling, PresetId};
use eie::metrics::ErrorForm;
use eie::moo::random_source;
use eie::{Error, Problem, Result};

#[derive(Parser)]
#[command(name = "eie-bench", version, about = "Run and summarize ideal point estimation experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Pf,
    Ps,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// List the preset problems.
    ListProblems,
    /// Write points of a problem to CSV.
    Sample {
        problem: String,
        #[arg(long, value_enum, default_value = "pf")]
        what: What,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a suite. Flags override the configuration file.
    Run {
        #[arg(long)]
        config: Option<PathBuf>,
        /// Comma-separated preset names.
        #[arg(long)]
        problem: Option<String>,
        /// Comma-separated: nsga2, moead, smsemoa.
        #[arg(long)]
        host: Option<String>,
        /// Comma-separated: none, ut, drp, eie, eie-separate.
        #[arg(long)]
        estimator: Option<String>,
        /// For example `1-10` or `1,4,9`.
        #[arg(long)]
        seeds: Option<String>,
        #[arg(long)]
        fe_max: Option<usize>,
        #[arg(long)]
        pop_size: Option<usize>,
        #[arg(long)]
        snapshot_every: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long, value_enum)]
        error_form: Option<FormArg>,
        #[arg(long, value_enum)]
        protocol: Option<ProtocolArg>,
        /// Verdict reference: an estimator name or a full `host+estimator` column.
        #[arg(long)]
        reference: Option<String>,
    },
    /// Print tables for a results directory.
    Report {
        dir: PathBuf,
        #[arg(long, default_value = "none")]
        reference: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Squared,
    Unsquared,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProtocolArg {
    Desk,
    Full,
}

fn list(csv: &str) -> Vec<String> {
    csv.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect()
}

fn list_problems() {
    println!("{:<10} {:>2} {:>3} {:>3}  {:<8} {}", "name", "m", "n", "s", "front", "p");
    for id in PresetId::all() {
        let p = id.params();
        let front = if p.inverted { "inverted" } else { "regular" };
        let exps: Vec<String> = p.p.iter().map(|v| sig6(*v)).collect();
        println!("{:<10} {:>2} {:>3} {:>3}  {:<8} {}", id.to_string(), p.m, p.n, p.s, front, exps.join(","));
    }
}

fn sample(problem: &str, what: What, count: usize, out: &PathBuf, seed: u64) -> Result<()> {
    let problem = BiasedProblem::named(problem)?;
    let params = problem.params();
    let mut rng = random_source(seed);
    let mut w = csv::Writer::from_path(out).map_err(|e| Error::Config(format!("{}: {e}", out.display())))?;
    let f_header = (1..=params.m).map(|i| format!("f{i}"));
    let x_header = (1..=params.n).map(|i| format!("x{i}"));
    match what {
        What::Pf => {
            w.write_record(f_header)?;
            for f in sample_pareto_front(params, FrontSampling::Grid(count), &mut rng) {
                w.write_record(f.iter().map(|v| sig6(*v)))?;
            }
        }
        What::Ps | What::Random => {
            w.write_record(x_header.chain(f_header))?;
            let xs = match what {
                What::Ps => sample_pareto_set(params, count, &mut rng),
                _ => (0..count).map(|_| problem.bounds().sample_uniform(&mut rng)).collect(),
            };
            for x in xs {
                let f = problem.evaluate(&x);
                w.write_record(x.iter().chain(&f).map(|v| sig6(*v)))?;
            }
        }
    }
    w.flush().map_err(|e| Error::io(out, e))
}

fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::ListProblems => list_problems(),
        Command::Sample { problem, what, count, out, seed } => sample(&problem, what, count, &out, seed)?,
        Command::Run {
            config,
            problem,
            host,
            estimator,
            seeds,
            fe_max,
            pop_size,
            snapshot_every,
            output,
            epsilon,
            error_form,
            protocol,
            reference,
        } => {
            let mut cfg = match &config {
                Some(path) => SuiteConfig::load(path)?,
                None => SuiteConfig::default(),
            };
            if let Some(p) = problem {
                cfg.problems = list(&p);
                cfg.custom.clear();
            }
            if let Some(h) = host {
                cfg.hosts = list(&h);
            }
            if let Some(e) = estimator {
                cfg.estimators = list(&e);
            }
            if let Some(s) = seeds {
                cfg.seeds = Some(parse_seeds(&s)?);
            }
            cfg.fe_max = fe_max.or(cfg.fe_max);
            cfg.pop_size = pop_size.or(cfg.pop_size);
            cfg.snapshot_every = snapshot_every.or(cfg.snapshot_every);
            cfg.output_dir = output.or(cfg.output_dir);
            cfg.epsilon = epsilon.or(cfg.epsilon);
            if let Some(f) = error_form {
                cfg.error_form = Some(match f {
                    FormArg::Squared => ErrorForm::Squared,
                    FormArg::Unsquared => ErrorForm::Unsquared,
                });
            }
            if let Some(p) = protocol {
                cfg.protocol = Some(match p {
                    ProtocolArg::Desk => Protocol::Desk,
                    ProtocolArg::Full => Protocol::Full,
                });
            }
            cfg.reference = reference.or(cfg.reference);
            let reference = cfg.reference.clone().unwrap_or_else(|| "none".into());
            let dir = cfg.output_dir();
            let result = run_suite(&cfg)?;
            if result.records.is_empty() {
                return Err(Error::Config(format!("all {} trials failed", result.failures.len())));
            }
            fs::create_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
            fs::write(dir.join("config.toml"), cfg.to_toml()?).map_err(|e| Error::io(&dir, e))?;
            for path in emit(&dir, &result.records, &result.failures, &reference)? {
                log::info!("wrote {}", path.display());
            }
            print!("{}", report(&dir, &reference)?);
            if !result.failures.is_empty() {
                eprintln!("{} trial(s) failed, see failures.csv", result.failures.len());
            }
        }
        Command::Report { dir, reference } => print!("{}", report(&dir, &reference)?),
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
