//! Work needed by the solver for the same random systems in each basis.
//! Each cell is patches / smallest width / unresolved.
//!
//! cargo run --release --example compare_bases -- [count] [seed]

use kts::experiments::bench_bases;
use kts::SolverConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let count: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(10);
    let seed: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(7);

    let rows = bench_bases(count, 2, 5, seed, &SolverConfig::default())?;
    println!(
        "{:>6} {:>7} {:>6} {:>22} {:>22} {:>22}",
        "seed", "degree", "zeros", "power", "bernstein", "chebyshev"
    );
    for row in &rows {
        let cells: Vec<String> = row
            .runs
            .iter()
            .map(|r| format!("{} / {:.2e} / {}", r.patches, r.smallest_width, r.unresolved))
            .collect();
        println!(
            "{:>6} {:>7} {:>6} {:>22} {:>22} {:>22}",
            row.seed,
            format!("{}x{}", row.m, row.n),
            row.runs[0].zeros.len(),
            cells[0],
            cells[1],
            cells[2]
        );
    }
    Ok(())
}
