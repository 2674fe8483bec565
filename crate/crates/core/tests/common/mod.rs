//! Test oracles built from explicit basis functions, independent of the
//! library's evaluation and conversion code.

#![allow(dead_code)]

use kts::basis::{Basis, Bivariate, BivariateSystem, Univariate};
use kts::experiments::random_chebyshev_system;
use kts::linalg::Vec2;
use kts::Patch;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn normal(rng: &mut impl Rng) -> f64 {
    rng.sample(StandardNormal)
}

/// Exact binomial coefficient by integer arithmetic.
pub fn choose(n: usize, k: usize) -> f64 {
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as f64
}

/// `T_k(t)` from the trigonometric / hyperbolic closed forms.
pub fn cheb_t(k: usize, t: f64) -> f64 {
    if t.abs() <= 1.0 {
        (k as f64 * t.acos()).cos()
    } else {
        let s = if t < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
        s * (k as f64 * t.abs().acosh()).cosh()
    }
}

/// `U_k(t)`, second kind, by its own recurrence.
fn cheb_u(k: isize, t: f64) -> f64 {
    if k < 0 {
        return 0.0;
    }
    let (mut a, mut b) = (1.0, 2.0 * t);
    if k == 0 {
        return a;
    }
    for _ in 1..k {
        let c = 2.0 * t * b - a;
        a = b;
        b = c;
    }
    b
}

/// Basis function `φ_k` of degree-`n` family, evaluated at `t`.
pub fn phi(basis: Basis, k: usize, n: usize, t: f64) -> f64 {
    match basis {
        Basis::Power => t.powi(k as i32),
        Basis::Chebyshev => cheb_t(k, t),
        Basis::Bernstein => choose(n, k) * (1.0 - t).powi((n - k) as i32) * t.powi(k as i32),
    }
}

/// `φ_k′(t)`.
pub fn dphi(basis: Basis, k: usize, n: usize, t: f64) -> f64 {
    match basis {
        Basis::Power => {
            if k == 0 {
                0.0
            } else {
                k as f64 * t.powi(k as i32 - 1)
            }
        }
        Basis::Chebyshev => k as f64 * cheb_u(k as isize - 1, t),
        Basis::Bernstein => {
            if n == 0 {
                return 0.0;
            }
            let lower = |j: isize| -> f64 {
                if j < 0 || j as usize > n - 1 {
                    0.0
                } else {
                    phi(Basis::Bernstein, j as usize, n - 1, t)
                }
            };
            n as f64 * (lower(k as isize - 1) - lower(k as isize))
        }
    }
}

pub fn eval_uni(p: &Univariate<f64>, t: f64) -> f64 {
    let n = p.degree();
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c * phi(p.basis(), k, n, t))
        .sum()
}

pub fn eval(f: &BivariateSystem, u: f64, v: f64) -> Vec2 {
    let (m, n) = f.degrees();
    let b = f.basis();
    let mut s = Vec2::ZERO;
    for i in 0..=m {
        let pu = phi(b, i, m, u);
        for j in 0..=n {
            s += f.coeff(i, j) * (pu * phi(b, j, n, v));
        }
    }
    s
}

/// Columns `(f_u, f_v)`.
pub fn jacobian(f: &BivariateSystem, u: f64, v: f64) -> [Vec2; 2] {
    let (m, n) = f.degrees();
    let b = f.basis();
    let (mut fu, mut fv) = (Vec2::ZERO, Vec2::ZERO);
    for i in 0..=m {
        for j in 0..=n {
            let c = f.coeff(i, j);
            fu += c * (dphi(b, i, m, u) * phi(b, j, n, v));
            fv += c * (phi(b, i, m, u) * dphi(b, j, n, v));
        }
    }
    [fu, fv]
}

pub fn eval_scalar(f: &Bivariate<f64>, u: f64, v: f64) -> f64 {
    let (m, n) = f.degrees();
    let b = f.basis();
    let mut s = 0.0;
    for i in 0..=m {
        for j in 0..=n {
            s += f.coeff(i, j) * phi(b, i, m, u) * phi(b, j, n, v);
        }
    }
    s
}

fn solve2(j: [Vec2; 2], r: Vec2) -> Option<Vec2> {
    let det = j[0].x * j[1].y - j[1].x * j[0].y;
    if det == 0.0 || !det.is_finite() {
        return None;
    }
    Some(Vec2::new(
        (r.x * j[1].y - j[1].x * r.y) / det,
        (j[0].x * r.y - r.x * j[0].y) / det,
    ))
}

/// Newton with the oracle evaluator; `None` unless the residual drops to
/// `1e-13 · (1 + scale)`.
pub fn oracle_newton(f: &BivariateSystem, start: Vec2) -> Option<Vec2> {
    let tol = 1e-13 * (1.0 + f.max_coeff_norm());
    let mut x = start;
    for _ in 0..60 {
        let r = eval(f, x.x, x.y);
        if !r.is_finite() || x.norm_inf() > 1e6 {
            return None;
        }
        if r.norm_inf() <= tol {
            // A couple of extra steps to settle at roundoff level.
            for _ in 0..2 {
                if let Some(d) = solve2(jacobian(f, x.x, x.y), eval(f, x.x, x.y)) {
                    x -= d;
                }
            }
            return Some(x);
        }
        x -= solve2(jacobian(f, x.x, x.y), r)?;
    }
    None
}

pub const ORACLE_GRID: usize = 201;

/// Zeros in `[0,1]²` (with `slack`) found by a sign-change scan on a
/// `ORACLE_GRID²` lattice followed by Newton polishing and deduplication.
pub fn oracle_zeros(f: &BivariateSystem, slack: f64) -> Vec<Vec2> {
    let k = ORACLE_GRID;
    let h = 1.0 / (k - 1) as f64;
    let vals: Vec<Vec<Vec2>> = (0..k)
        .map(|a| (0..k).map(|b| eval(f, a as f64 * h, b as f64 * h)).collect())
        .collect();
    let mut found: Vec<Vec2> = Vec::new();
    let changes = |xs: [f64; 4]| {
        let lo = xs.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        lo <= 0.0 && hi >= 0.0
    };
    for a in 0..k - 1 {
        for b in 0..k - 1 {
            let c = [vals[a][b], vals[a + 1][b], vals[a][b + 1], vals[a + 1][b + 1]];
            if !(changes(c.map(|p| p.x)) && changes(c.map(|p| p.y))) {
                continue;
            }
            let lo = Vec2::new(a as f64 * h, b as f64 * h);
            let starts = [
                lo + Vec2::new(0.5 * h, 0.5 * h),
                lo,
                lo + Vec2::new(h, 0.0),
                lo + Vec2::new(0.0, h),
                lo + Vec2::new(h, h),
            ];
            for s in starts {
                if let Some(z) = oracle_newton(f, s) {
                    if (z - s).norm_inf() <= 3.0 * h {
                        if !found.iter().any(|q| (*q - z).norm_inf() < 1e-10) {
                            found.push(z);
                        }
                        break;
                    }
                }
            }
        }
    }
    found.retain(|z| z.x >= -slack && z.x <= 1.0 + slack && z.y >= -slack && z.y <= 1.0 + slack);
    found
}

/// Every point of `a` has a distinct partner in `b` within `tol`, and the
/// sets have equal size.
pub fn same_zero_set(a: &[Vec2], b: &[Vec2], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|p| {
        let hit = (0..b.len()).find(|&j| !used[j] && (b[j] - *p).norm_inf() <= tol);
        if let Some(j) = hit {
            used[j] = true;
        }
        hit.is_some()
    })
}

pub fn random_patch(rng: &mut impl Rng, max_r: f64) -> Patch {
    let r = rng.gen_range(1e-3..max_r.min(0.5));
    let u = rng.gen_range(r..=1.0 - r);
    let v = rng.gen_range(r..=1.0 - r);
    Patch::new(Vec2::new(u, v), r).unwrap()
}

pub fn random_system(rng: &mut impl Rng, basis: Basis, max_m: usize, max_n: usize) -> BivariateSystem {
    let m = rng.gen_range(0..=max_m);
    let n = rng.gen_range(0..=max_n);
    Bivariate::from_fn(basis, m, n, |_, _| Vec2::new(normal(rng), normal(rng)))
}

/// A random Chebyshev-generated system (degrees in `lo..=hi`), expressed in `basis`.
pub fn protocol_system(seed: u64, lo: usize, hi: usize) -> BivariateSystem {
    let mut r = rng(seed);
    let m = r.gen_range(lo..=hi);
    let n = r.gen_range(lo..=hi);
    random_chebyshev_system(&mut r, m, n)
}

/// A random system in `basis` shifted so that `p` is a zero.
pub fn system_with_zero_at(rng: &mut impl Rng, basis: Basis, m: usize, n: usize, p: Vec2) -> BivariateSystem {
    let f = Bivariate::from_fn(basis, m, n, |_, _| Vec2::new(normal(rng), normal(rng)));
    let fp = eval(&f, p.x, p.y);
    f.add_constant(-fp)
}

pub fn unit_vector(rng: &mut impl Rng) -> Vec2 {
    let a: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    Vec2::new(a.cos(), a.sin())
}
