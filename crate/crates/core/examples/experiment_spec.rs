//! Run an experiment spec and print the CSV table.
//!
//! `cargo run --release --example experiment_spec [SPEC.json]`

use cliquecover::harness::{run_experiment, ExperimentSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/specs/smoke.json").into());
    let spec: ExperimentSpec = serde_json::from_str(&std::fs::read_to_string(&path)?)?;
    let out = run_experiment(&spec)?;
    print!("{}", out.to_csv()?);
    for s in &out.skipped {
        eprintln!("skipped {}: {}", s.instance_id, s.reason);
    }
    Ok(())
}
