//! Solving a system from a JSON file, or a built-in one.
//!
//! cargo run --example solve_system -- [system.json]

use kts::io::{parse_system, parse_system_str, report_to_string};
use kts::{kts_solve, SolverConfig};

const DEFAULT: &str = r#"{
  "basis": "power", "m": 2, "n": 2,
  "coeffs": [[[-0.2, 0.05], [0.0, 0.0], [1.0, 0.0]],
             [[0.0, -1.0],  [0.0, 0.0], [0.0, 0.0]],
             [[1.0, 0.0],   [0.0, 0.0], [0.0, 1.0]]]
}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = match std::env::args().nth(1) {
        Some(path) => parse_system(path.as_ref())?,
        None => parse_system_str(DEFAULT)?,
    };
    let cfg = SolverConfig::default();
    let mut report = kts_solve(&f, &cfg)?;
    report.attach_condition_estimate(&f, &cfg)?;

    print!("{}", report_to_string(f.basis(), &report));
    println!("status: {:?}", report.status());
    Ok(())
}
