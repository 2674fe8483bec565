//! Reproducible experiment drivers: univariate interval comparisons between
//! the Bernstein and Chebyshev bases, and a three-basis solver benchmark.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::basis::{Basis, BasisError, Bivariate, BivariateSystem, Univariate};
use crate::bounding::{bounding_interval, Interval};
use crate::linalg::Vec2;
use crate::solver::{condition_estimate, kts_solve, SolverConfig, SolverError};

/// Points used by the least-squares families (twice the coefficient count, minus one).
pub const LSQ_POINTS: usize = 13;
/// Grid size of the range scan in the interval study.
pub const RANGE_GRID: usize = 2001;
/// Absolute tolerance for "endpoint on the true range".
pub const EXACT_TOL: f64 = 1e-9;

#[derive(Debug, thiserror::Error)]
pub enum ExperimentError {
    #[error("interpolation matrix is singular")]
    SingularInterpolation,
    #[error("unknown family `{0}` (expected rand, sin, sin-L, sinw or sinw-L)")]
    UnknownFamily(String),
    #[error("invalid degree range {min}..={max}")]
    DegreeRange { min: usize, max: usize },
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("{}: {source}", path.display())]
    Output {
        path: std::path::PathBuf,
        #[source]
        source: csv::Error,
    },
}

/// How the degree-6 test polynomials are produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Interpolates normally distributed values at evenly spaced points.
    Rand,
    /// Interpolates `sin(a x + b)`.
    Sin,
    /// Least-squares fit of `sin(a x + b)`.
    SinL,
    /// Interpolates `sin(6 a x + b)`.
    Sinw,
    /// Least-squares fit of `sin(6 a x + b)`.
    SinwL,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::Rand, Family::Sin, Family::SinL, Family::Sinw, Family::SinwL];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Rand => "rand",
            Family::Sin => "sin",
            Family::SinL => "sin-L",
            Family::Sinw => "sinw",
            Family::SinwL => "sinw-L",
        }
    }

    fn least_squares(self) -> bool {
        matches!(self, Family::SinL | Family::SinwL)
    }

    fn stream(self) -> u64 {
        Family::ALL.iter().position(|&f| f == self).unwrap() as u64
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = ExperimentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| ExperimentError::UnknownFamily(s.to_string()))
    }
}

/// One generated polynomial in both representations.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyMember {
    /// On `[-1, 1]`.
    pub chebyshev: Univariate<f64>,
    /// The same function, reparametrized to `[0, 1]`.
    pub bernstein: Univariate<f64>,
    /// The `(x, y)` data that was fitted.
    pub samples: Vec<(f64, f64)>,
}

/// `n` evenly spaced points from `-1` to `1` inclusive.
pub fn equispaced(n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![0.0];
    }
    (0..n).map(|k| -1.0 + 2.0 * k as f64 / (n - 1) as f64).collect()
}

/// Chebyshev coefficients of the degree-`degree` polynomial through (or, with
/// more points than coefficients, closest in least squares to) `samples`.
pub fn chebyshev_fit(samples: &[(f64, f64)], degree: usize) -> Result<Univariate<f64>, ExperimentError> {
    let cols = degree + 1;
    let a = DMatrix::from_fn(samples.len(), cols, |r, c| chebyshev_t(c, samples[r].0));
    let b = DVector::from_iterator(samples.len(), samples.iter().map(|s| s.1));
    let x = if samples.len() == cols {
        a.lu().solve(&b).ok_or(ExperimentError::SingularInterpolation)?
    } else {
        a.svd(true, true)
            .solve(&b, 1e-14)
            .map_err(|_| ExperimentError::SingularInterpolation)?
    };
    Ok(Univariate::new(Basis::Chebyshev, x.iter().copied().collect())?)
}

fn chebyshev_t(k: usize, t: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, t);
    match k {
        0 => 1.0,
        _ => {
            for _ in 1..k {
                let next = 2.0 * t * cur - prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// `count` polynomials of the given family. Each family draws from its own
/// stream of the seeded generator, so families are independent of each other.
pub fn generate_family(
    family: Family,
    degree: usize,
    count: usize,
    seed: u64,
) -> Result<Vec<FamilyMember>, ExperimentError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(family.stream());
    let xs = equispaced(if family.least_squares() {
        2 * degree + 1
    } else {
        degree + 1
    });

    (0..count)
        .map(|_| {
            let samples: Vec<(f64, f64)> = match family {
                Family::Rand => xs.iter().map(|&x| (x, rng.sample(StandardNormal))).collect(),
                _ => {
                    let a: f64 = rng.sample(StandardNormal);
                    let b: f64 = rng.sample(StandardNormal);
                    let freq = if matches!(family, Family::Sinw | Family::SinwL) {
                        6.0 * a
                    } else {
                        a
                    };
                    xs.iter().map(|&x| (x, (freq * x + b).sin())).collect()
                }
            };
            let chebyshev = chebyshev_fit(&samples, degree)?;
            let bernstein = chebyshev.convert(Basis::Bernstein)?;
            Ok(FamilyMember {
                chebyshev,
                bernstein,
                samples,
            })
        })
        .collect()
}

/// Range of `p` over its canonical domain: a dense grid scan with interior
/// grid extrema polished by Newton steps on `p′`.
pub fn true_range(p: &Univariate<f64>) -> Interval {
    let (l, h) = p.basis().canonical_domain();
    let step = (h - l) / (RANGE_GRID - 1) as f64;
    let ts: Vec<f64> = (0..RANGE_GRID).map(|k| l + step * k as f64).collect();
    let vals: Vec<f64> = ts.iter().map(|&t| p.eval(t)).collect();
    let dp = p.derivative();
    let ddp = dp.derivative();

    let mut lo = vals.iter().copied().fold(f64::INFINITY, f64::min);
    let mut hi = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    for k in 1..RANGE_GRID - 1 {
        let is_max = vals[k] >= vals[k - 1] && vals[k] >= vals[k + 1];
        let is_min = vals[k] <= vals[k - 1] && vals[k] <= vals[k + 1];
        if !(is_max || is_min) {
            continue;
        }
        let mut t = ts[k];
        for _ in 0..8 {
            let d2 = ddp.eval(t);
            if d2 == 0.0 {
                break;
            }
            t = (t - dp.eval(t) / d2).clamp(ts[k - 1], ts[k + 1]);
        }
        let v = p.eval(t);
        lo = lo.min(v);
        hi = hi.max(v);
    }
    Interval { lo, hi }
}

/// Per-family tallies of the interval study.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntervalCounts {
    pub family: Family,
    pub total: usize,
    pub bernstein_tighter: usize,
    pub chebyshev_tighter: usize,
    pub ties: usize,
    pub bernstein_exact: usize,
    pub chebyshev_exact: usize,
}

/// Verdict for a single polynomial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalComparison {
    pub chebyshev: Interval,
    pub bernstein: Interval,
    pub range: Interval,
}

impl IntervalComparison {
    pub fn of(member: &FamilyMember) -> Self {
        Self {
            chebyshev: bounding_interval(&member.chebyshev),
            bernstein: bounding_interval(&member.bernstein),
            range: true_range(&member.chebyshev),
        }
    }

    /// At least one endpoint of `i` within [`EXACT_TOL`] of the range.
    pub fn exact(&self, i: &Interval) -> bool {
        (i.lo - self.range.lo).abs() <= EXACT_TOL || (i.hi - self.range.hi).abs() <= EXACT_TOL
    }
}

pub fn interval_study(family: Family, count: usize, seed: u64) -> Result<IntervalCounts, ExperimentError> {
    let mut c = IntervalCounts {
        family,
        total: count,
        bernstein_tighter: 0,
        chebyshev_tighter: 0,
        ties: 0,
        bernstein_exact: 0,
        chebyshev_exact: 0,
    };
    for member in generate_family(family, 6, count, seed)? {
        let cmp = IntervalComparison::of(&member);
        let (wb, wc) = (cmp.bernstein.width(), cmp.chebyshev.width());
        if wb < wc {
            c.bernstein_tighter += 1;
        } else if wc < wb {
            c.chebyshev_tighter += 1;
        } else {
            c.ties += 1;
        }
        c.bernstein_exact += cmp.exact(&cmp.bernstein) as usize;
        c.chebyshev_exact += cmp.exact(&cmp.chebyshev) as usize;
    }
    Ok(c)
}

/// Writes `tighter.csv` and `exact_endpoint.csv` into `dir`.
pub fn write_interval_tables(dir: &Path, rows: &[IntervalCounts]) -> Result<(), ExperimentError> {
    let tighter = dir.join("tighter.csv");
    write_csv(&tighter, |w| {
        w.write_record(["family", "bernstein_tighter", "chebyshev_tighter", "ties"])?;
        for r in rows {
            w.write_record([
                r.family.tag().to_string(),
                r.bernstein_tighter.to_string(),
                r.chebyshev_tighter.to_string(),
                r.ties.to_string(),
            ])?;
        }
        Ok(())
    })?;
    let exact = dir.join("exact_endpoint.csv");
    write_csv(&exact, |w| {
        w.write_record(["family", "bernstein_exact", "chebyshev_exact"])?;
        for r in rows {
            w.write_record([
                r.family.tag().to_string(),
                r.bernstein_exact.to_string(),
                r.chebyshev_exact.to_string(),
            ])?;
        }
        Ok(())
    })
}

/// A system with independent standard-normal Chebyshev coefficients.
pub fn random_chebyshev_system(rng: &mut impl Rng, m: usize, n: usize) -> BivariateSystem {
    Bivariate::from_fn(Basis::Chebyshev, m, n, |_, _| {
        Vec2::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    })
}

/// One basis' solve in a bench row.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisRun {
    pub basis: Basis,
    pub patches: usize,
    pub smallest_width: f64,
    pub zeros: Vec<Vec2>,
    pub unresolved: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub seed: u64,
    pub m: usize,
    pub n: usize,
    pub cond_estimate: Option<f64>,
    /// In the order power, Bernstein, Chebyshev.
    pub runs: [BasisRun; 3],
}

/// Solves one random system (drawn from `seed`) in all three bases.
pub fn bench_system(
    seed: u64,
    min_degree: usize,
    max_degree: usize,
    cfg: &SolverConfig,
) -> Result<BenchRow, ExperimentError> {
    if min_degree > max_degree {
        return Err(ExperimentError::DegreeRange {
            min: min_degree,
            max: max_degree,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = rng.gen_range(min_degree..=max_degree);
    let n = rng.gen_range(min_degree..=max_degree);
    let cheb = random_chebyshev_system(&mut rng, m, n);

    let mut cond = None;
    let mut run = |basis: Basis| -> Result<BasisRun, ExperimentError> {
        let f = cheb.change_basis(basis)?;
        let report = kts_solve(&f, cfg)?;
        if basis == Basis::Chebyshev {
            cond = condition_estimate(&f, &report.zeros, cfg)?;
        }
        Ok(BasisRun {
            basis,
            patches: report.patches_examined,
            smallest_width: report.smallest_width,
            zeros: report.zeros.iter().map(|z| z.location).collect(),
            unresolved: report.unresolved.len(),
        })
    };
    let runs = [run(Basis::Power)?, run(Basis::Bernstein)?, run(Basis::Chebyshev)?];
    Ok(BenchRow {
        seed,
        m,
        n,
        cond_estimate: cond,
        runs,
    })
}

/// `count` systems with seeds `seed, seed + 1, …`.
pub fn bench_bases(
    count: usize,
    min_degree: usize,
    max_degree: usize,
    seed: u64,
    cfg: &SolverConfig,
) -> Result<Vec<BenchRow>, ExperimentError> {
    (0..count as u64)
        .map(|i| bench_system(seed.wrapping_add(i), min_degree, max_degree, cfg))
        .collect()
}

pub const BENCH_HEADER: [&str; 10] = [
    "seed",
    "m",
    "n",
    "cond_estimate",
    "power_patches",
    "power_width",
    "bernstein_patches",
    "bernstein_width",
    "chebyshev_patches",
    "chebyshev_width",
];

pub fn write_bench_csv(path: &Path, rows: &[BenchRow]) -> Result<(), ExperimentError> {
    write_csv(path, |w| {
        w.write_record(BENCH_HEADER)?;
        for r in rows {
            let mut rec = vec![
                r.seed.to_string(),
                r.m.to_string(),
                r.n.to_string(),
                r.cond_estimate.map(|c| c.to_string()).unwrap_or_default(),
            ];
            for run in &r.runs {
                rec.push(run.patches.to_string());
                rec.push(run.smallest_width.to_string());
            }
            w.write_record(rec)?;
        }
        Ok(())
    })
}

fn write_csv(
    path: &Path,
    body: impl FnOnce(&mut csv::Writer<std::fs::File>) -> Result<(), csv::Error>,
) -> Result<(), ExperimentError> {
    let wrap = |source| ExperimentError::Output {
        path: path.to_path_buf(),
        source,
    };
    let mut w = csv::Writer::from_path(path).map_err(wrap)?;
    body(&mut w).map_err(wrap)?;
    w.flush().map_err(|e| wrap(e.into()))
}
