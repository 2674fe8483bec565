//! Compares Bernstein and Chebyshev bounding intervals on the five degree-6
//! polynomial families.
//!
//! cargo run --release --example interval_study -- [count] [seed]

use kts::experiments::{interval_study, Family};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let count: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(1000);
    let seed: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(2024);

    println!(
        "{:<8} {:>10} {:>10} {:>6} {:>10} {:>10}",
        "family", "bern<cheb", "cheb<bern", "ties", "bern exact", "cheb exact"
    );
    for family in Family::ALL {
        let c = interval_study(family, count, seed)?;
        println!(
            "{:<8} {:>10} {:>10} {:>6} {:>10} {:>10}",
            family.tag(),
            c.bernstein_tighter,
            c.chebyshev_tighter,
            c.ties,
            c.bernstein_exact,
            c.chebyshev_exact
        );
    }
    Ok(())
}
