//! Restricting a system to a square patch and re-expressing it, in the same
//! basis, over the canonical square.

use crate::basis::{binomial, substitute_affine, Axis, Basis, Bivariate, Coeff};
use crate::linalg::Vec2;

/// Slack allowed when checking that a patch lies inside `[0, 1]²`.
const DOMAIN_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum ReparamError {
    #[error("patch half-width must be positive and finite, got {0}")]
    BadRadius(f64),
    #[error("patch center must be finite")]
    BadCenter,
    #[error("patch {center:?} ± {half_width} leaves the unit square")]
    OutsideDomain { center: Vec2, half_width: f64 },
}

/// The closed ∞-norm ball `[u⁰ - r, u⁰ + r] × [v⁰ - r, v⁰ + r]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Patch {
    center: Vec2,
    half_width: f64,
}

impl Patch {
    pub fn new(center: Vec2, half_width: f64) -> Result<Self, ReparamError> {
        if half_width.is_nan() || half_width <= 0.0 || half_width.is_infinite() {
            return Err(ReparamError::BadRadius(half_width));
        }
        if !center.is_finite() {
            return Err(ReparamError::BadCenter);
        }
        Ok(Self { center, half_width })
    }

    /// `[0, 1]²`.
    pub fn unit() -> Self {
        Self {
            center: Vec2::new(0.5, 0.5),
            half_width: 0.5,
        }
    }

    pub fn center(&self) -> Vec2 {
        self.center
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    /// Side length `2r`.
    pub fn width(&self) -> f64 {
        2.0 * self.half_width
    }

    /// Same center, radius scaled by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self, ReparamError> {
        Self::new(self.center, self.half_width * factor)
    }

    pub fn within_unit_square(&self, slack: f64) -> bool {
        let r = self.half_width;
        let c = self.center;
        c.x - r >= -slack && c.x + r <= 1.0 + slack && c.y - r >= -slack && c.y + r <= 1.0 + slack
    }

    /// Whether `p` lies in the patch.
    pub fn contains(&self, p: Vec2) -> bool {
        (p - self.center).norm_inf() <= self.half_width
    }

    /// The four quadrants in the order lower-left, lower-right, upper-left, upper-right.
    pub fn subdivide(&self) -> [Patch; 4] {
        let h = 0.5 * self.half_width;
        let c = self.center;
        [(-h, -h), (h, -h), (-h, h), (h, h)].map(|(du, dv)| Patch {
            center: Vec2::new(c.x + du, c.y + dv),
            half_width: h,
        })
    }

    /// The affine map from the canonical square of `basis` onto the patch.
    pub fn map_from_canonical(&self, basis: Basis, p: Vec2) -> Vec2 {
        let (l, h) = basis.canonical_domain();
        let scale = 2.0 * self.half_width / (h - l);
        let lo = self.center - Vec2::new(self.half_width, self.half_width);
        Vec2::new(lo.x + (p.x - l) * scale, lo.y + (p.y - l) * scale)
    }
}

/// Lower-triangular `λ` with `T_i(a t + b) = Σ_k λ_ik T_k(t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChebAffineMatrix {
    a: f64,
    b: f64,
    rows: Vec<Vec<f64>>,
}

impl ChebAffineMatrix {
    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn degree(&self) -> usize {
        self.rows.len() - 1
    }

    /// `λ_i0 … λ_ii`.
    pub fn row(&self, i: usize) -> &[f64] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, k: usize) -> f64 {
        self.rows[i].get(k).copied().unwrap_or(0.0)
    }

    /// Coefficients of `Σ_i c_i T_i(a t + b)` in the `T_k(t)`.
    pub fn apply<T: Coeff>(&self, c: &[T]) -> Vec<T> {
        let mut out = vec![T::ZERO; c.len()];
        for (i, &ci) in c.iter().enumerate() {
            for (k, &l) in self.rows[i].iter().enumerate() {
                out[k] += ci * l;
            }
        }
        out
    }
}

/// Builds `λ` for `T_i(a t + b)` up to `degree` from
/// `T_{i+1}(s) = 2 s T_i(s) - T_{i-1}(s)` and `2 t T_k = T_{k+1} + T_{|k-1|}`.
pub fn cheb_affine(a: f64, b: f64, degree: usize) -> ChebAffineMatrix {
    let mut rows: Vec<Vec<f64>> = vec![vec![1.0]];
    if degree >= 1 {
        rows.push(vec![b, a]);
    }
    for i in 1..degree {
        let cur = &rows[i];
        let prev = &rows[i - 1];
        let mut next = vec![0.0; i + 2];
        // 2a t T_0 = 2a T_1.
        next[1] += 2.0 * a * cur[0];
        for k in 1..=i {
            next[k + 1] += a * cur[k];
        }
        // The T_{k-1} half of 2a t T_k, for k >= 1.
        for k in 0..i {
            next[k] += a * cur[k + 1];
        }
        for k in 0..=i {
            next[k] += 2.0 * b * cur[k];
        }
        for k in 0..i {
            next[k] -= prev[k];
        }
        rows.push(next);
    }
    ChebAffineMatrix { a, b, rows }
}

/// Returns `f̂` in the same basis with `f̂(x̂) = f(φ(x̂))`, where `φ` maps the
/// canonical square of the basis onto `patch`.
///
/// With `allow_outside` unset, the patch must lie in `[0, 1]²`. Enlarged balls
/// used by the Kantorovich test pass `true`; the substitutions are polynomial
/// identities, so nothing breaks outside the unit square.
pub fn reparametrize<T: Coeff>(
    f: &Bivariate<T>,
    patch: &Patch,
    allow_outside: bool,
) -> Result<Bivariate<T>, ReparamError> {
    if !allow_outside && !patch.within_unit_square(DOMAIN_SLACK) {
        return Err(ReparamError::OutsideDomain {
            center: patch.center,
            half_width: patch.half_width,
        });
    }
    let r = patch.half_width;
    let c = patch.center;
    Ok(match f.basis() {
        Basis::Power => f
            .map_axis(Axis::U, |line| substitute_affine(line, r, c.x))
            .map_axis(Axis::V, |line| substitute_affine(line, r, c.y)),
        Basis::Chebyshev => {
            let (m, n) = f.degrees();
            let lambda = cheb_affine(r, c.x, m);
            let mu = cheb_affine(r, c.y, n);
            f.map_axis(Axis::U, |line| lambda.apply(line))
                .map_axis(Axis::V, |line| mu.apply(line))
        }
        Basis::Bernstein => f
            .map_axis(Axis::U, |line| bernstein_restrict(line, c.x - r, c.x + r))
            .map_axis(Axis::V, |line| bernstein_restrict(line, c.y - r, c.y + r)),
    })
}

/// Bernstein coefficients over `[0, 1]` of `t ↦ p(lo + (hi - lo) t)`.
///
/// With `t = s / (1 + s)`, `(1 + s)^m p = Σ_i C(m,i) c_i A^i B^(m-i)` where
/// `A = lo + hi s` and `B = (1 - lo) + (1 - hi) s`; the coefficient of `s^k`
/// is `C(m,k)` times the new control point `k`.
fn bernstein_restrict<T: Coeff>(c: &[T], lo: f64, hi: f64) -> Vec<T> {
    let m = c.len() - 1;
    let a = [lo, hi];
    let b = [1.0 - lo, 1.0 - hi];

    // Powers B^0 .. B^m as dense coefficient arrays in s.
    let mut b_pow: Vec<Vec<f64>> = vec![vec![1.0]];
    for p in 1..=m {
        let next = mul_linear(&b_pow[p - 1], b);
        b_pow.push(next);
    }

    let mut acc: Vec<T> = vec![c[m] * binomial(m, m)];
    for i in (0..m).rev() {
        let mut next = mul_linear(&acc, a);
        let w = binomial(m, i);
        for (k, &bk) in b_pow[m - i].iter().enumerate() {
            next[k] += c[i] * (w * bk);
        }
        acc = next;
    }
    acc.iter()
        .enumerate()
        .map(|(k, &g)| g * (1.0 / binomial(m, k)))
        .collect()
}

/// `p(s) · (l[0] + l[1] s)` for a dense coefficient array `p`.
fn mul_linear<T: Coeff>(p: &[T], l: [f64; 2]) -> Vec<T> {
    let mut out = vec![T::ZERO; p.len() + 1];
    for (k, &pk) in p.iter().enumerate() {
        out[k] += pk * l[0];
        out[k + 1] += pk * l[1];
    }
    out
}
