//! A small suite from a TOML string: two instances, one host, three
//! estimators, five seeds. Results go to a temporary directory.

use eie::bench::{emit, report, run_suite, SuiteConfig};

const CONFIG: &str = r#"
problems = ["mop2", "mop6"]
hosts = ["moead"]
estimators = ["none", "drp", "eie"]
seeds = [1, 2, 3, 4, 5]
fe_max = 20000
"#;

fn main() -> eie::Result<()> {
    let config = SuiteConfig::from_toml(CONFIG)?;
    let result = run_suite(&config)?;
    let dir = std::env::temp_dir().join("eie-mini-suite");
    for path in emit(&dir, &result.records, &result.failures, "none")? {
        println!("wrote {}", path.display());
    }
    println!("\n{}", report(&dir, "none")?);
    Ok(())
}
