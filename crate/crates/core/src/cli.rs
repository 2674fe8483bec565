//! The `kts` command line: `solve`, `bench` and `intervals`.
//!
//! Exit codes: 0 on success, 1 on usage, I/O or parse errors, 2 when a solve
//! leaves unresolved patches. Set `KTS_LOG=info` (or `trace`) for diagnostics
//! on standard error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::basis::Basis;
use crate::experiments::{bench_bases, interval_study, write_bench_csv, write_interval_tables, Family};
use crate::io::{parse_system, write_report};
use crate::solver::{kts_solve, SolveStatus, SolverConfig, COND_LABEL};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_UNRESOLVED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "kts",
    version,
    about = "All zeros of bivariate polynomial systems on the unit square"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve a system read from a JSON file.
    Solve {
        #[arg(long)]
        input: PathBuf,
        /// Convert to this basis before solving.
        #[arg(long, value_parser = parse_basis)]
        basis: Option<Basis>,
        /// Newton residual tolerance (relative to the coefficient scale).
        #[arg(long)]
        tol: Option<f64>,
        /// Smallest half-width is 2^-K.
        #[arg(long, value_name = "K")]
        max_depth: Option<i32>,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Also estimate the condition number.
        #[arg(long)]
        cond: bool,
    },
    /// Solve random systems in all three bases and tabulate the work.
    Bench {
        #[arg(long, default_value_t = 5)]
        count: usize,
        #[arg(long, default_value_t = 2)]
        min_degree: usize,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare Bernstein and Chebyshev bounding intervals on degree-6 families.
    Intervals {
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Directory for tighter.csv and exact_endpoint.csv.
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    s.parse().map_err(|e| format!("{e}"))
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let _ = env_logger::Builder::from_env(env_logger::Env::new().filter("KTS_LOG"))
        .format_timestamp(None)
        .try_init();

    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_FAILURE } else { EXIT_OK };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_FAILURE
        }
    }
}

type CmdResult = Result<i32, Box<dyn std::error::Error>>;

fn execute(cmd: Command) -> CmdResult {
    match cmd {
        Command::Solve {
            input,
            basis,
            tol,
            max_depth,
            report,
            cond,
        } => solve(input, basis, tol, max_depth, report, cond),
        Command::Bench {
            count,
            min_degree,
            max_degree,
            seed,
            out,
        } => {
            let rows = bench_bases(count, min_degree, max_degree, seed, &SolverConfig::default())?;
            write_bench_csv(&out, &rows)?;
            for r in &rows {
                let cond = r.cond_estimate.map_or("-".to_string(), |c| format!("{c:.3e}"));
                let cells: Vec<String> = r
                    .runs
                    .iter()
                    .map(|run| format!("{} {}/{:.4}", run.basis, run.patches, run.smallest_width))
                    .collect();
                println!("seed {} ({}, {}) cond {cond}: {}", r.seed, r.m, r.n, cells.join(", "));
            }
            Ok(EXIT_OK)
        }
        Command::Intervals { count, seed, out } => {
            std::fs::create_dir_all(&out)?;
            let rows = Family::ALL
                .into_iter()
                .map(|f| interval_study(f, count, seed))
                .collect::<Result<Vec<_>, _>>()?;
            write_interval_tables(&out, &rows)?;
            println!("family  bernstein_tighter chebyshev_tighter ties bernstein_exact chebyshev_exact");
            for r in &rows {
                println!(
                    "{:<7} {:>17} {:>17} {:>4} {:>15} {:>15}",
                    r.family.tag(),
                    r.bernstein_tighter,
                    r.chebyshev_tighter,
                    r.ties,
                    r.bernstein_exact,
                    r.chebyshev_exact
                );
            }
            Ok(EXIT_OK)
        }
    }
}

fn solve(
    input: PathBuf,
    basis: Option<Basis>,
    tol: Option<f64>,
    max_depth: Option<i32>,
    report_path: Option<PathBuf>,
    cond: bool,
) -> CmdResult {
    let mut f = parse_system(&input)?;
    if let Some(b) = basis {
        f = f.change_basis(b)?;
    }
    let mut cfg = SolverConfig::default();
    if let Some(t) = tol {
        cfg.newton_tol = t;
    }
    if let Some(k) = max_depth {
        cfg.min_half_width = 2f64.powi(-k);
    }
    let mut report = kts_solve(&f, &cfg)?;
    if cond {
        report.attach_condition_estimate(&f, &cfg)?;
    }
    if let Some(path) = &report_path {
        write_report(path, f.basis(), &report)?;
    }

    println!(
        "{} zero(s) in the {} basis; {} patches examined, smallest width {}",
        report.zeros.len(),
        f.basis(),
        report.patches_examined,
        report.smallest_width
    );
    for z in &report.zeros {
        println!(
            "  ({:.15}, {:.15})  rho* = {:.6e}  omega* = {:.6e}",
            z.location.x, z.location.y, z.rho_star, z.omega_star
        );
    }
    if let Some(c) = report.cond_estimate {
        println!("condition {COND_LABEL}: {c:.6e}");
    }
    Ok(match report.status() {
        SolveStatus::Clean => EXIT_OK,
        SolveStatus::Unresolved => {
            eprintln!("warning: {} patch(es) left unresolved", report.unresolved.len());
            EXIT_UNRESOLVED
        }
    })
}
