//! Running an experiment from a JSON config and writing its CSV, the same
//! path the `run` subcommand takes. The interior target misses its error
//! goal within the dimension cap, which the run reports as a warning.

use ritz_bounds::harness::{parse_csv, run_experiment, write_csv, ExperimentConfig};

const CONFIG: &str = r#"{
  "spectrum": {"banded": {"bands": 3, "total": 30, "void": 0.6, "range": [-1, 1]}},
  "targets": [
    {"index": 1, "families": ["extremal-exact", "extremal-asymptotic"]},
    {"index": 11, "families": ["interior-exact"], "shift": {"optimize": {"target_error": 1e-3}}}
  ],
  "max_dim": 30
}"#;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let config = ExperimentConfig::from_json(CONFIG)?;
    let out = run_experiment(&config)?;
    for w in &out.warnings {
        println!("warning: {w}");
    }
    let mut csv = Vec::new();
    write_csv(&out.records, &mut csv)?;
    let text = String::from_utf8(csv)?;
    for line in text.lines().take(6) {
        println!("{line}");
    }
    println!("... {} rows", out.records.len());
    assert_eq!(parse_csv(&text)?, out.records);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
