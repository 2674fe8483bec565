//! Bounding polytopes of `{f(u,v) : (u,v) ∈ [l,h]²}` and the tightness constants.
//!
//! Bernstein systems are bounded by the convex hull of their control points;
//! power and Chebyshev systems by the zonotope `c_00 + Σ_{i+j>0} s_ij c_ij`,
//! `s_ij ∈ [-1, 1]`. Both are affinely invariant and both answer origin
//! membership in closed form.

use crate::basis::{Basis, Bivariate, BivariateSystem, Univariate};
use crate::linalg::Vec2;

/// Points closer than this (in every coordinate) are merged before the hull sweep.
const HULL_DEDUP_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BoundingError {
    #[error("support direction must be nonzero")]
    ZeroDirection,
    #[error("gamma requires theta >= 1, got {0}")]
    ThetaTooSmall(f64),
}

/// Convex hull of a finite point set, vertices counterclockwise.
///
/// Degenerate inputs give a segment (two vertices) or a single point.
#[derive(Debug, Clone, PartialEq)]
pub struct ControlHull {
    vertices: Vec<Vec2>,
}

impl ControlHull {
    /// Andrew's monotone chain after near-duplicate removal. Collinear points
    /// on edges are dropped.
    pub fn from_points(points: &[Vec2]) -> Self {
        let mut pts: Vec<Vec2> = Vec::with_capacity(points.len());
        for &p in points {
            let dup = pts
                .iter()
                .any(|q| (p.x - q.x).abs() <= HULL_DEDUP_TOL && (p.y - q.y).abs() <= HULL_DEDUP_TOL);
            if !dup {
                pts.push(p);
            }
        }
        pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
        if pts.len() <= 2 {
            return Self { vertices: pts };
        }

        let turn = |o: Vec2, a: Vec2, b: Vec2| (a - o).cross(b - o);
        let mut hull: Vec<Vec2> = Vec::with_capacity(2 * pts.len());
        for &p in &pts {
            while hull.len() >= 2 && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
                hull.pop();
            }
            hull.push(p);
        }
        let lower_len = hull.len() + 1;
        for &p in pts.iter().rev().skip(1) {
            while hull.len() >= lower_len && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
        Self { vertices: hull }
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    fn contains_origin_within(&self, tol: f64) -> bool {
        match self.vertices.as_slice() {
            [] => false,
            [p] => p.norm() <= tol,
            [a, b] => segment_distance_to_origin(*a, *b) <= tol,
            vs => vs.iter().zip(vs.iter().cycle().skip(1)).all(|(&a, &b)| {
                let edge = b - a;
                // Signed distance of the origin to the left of edge a→b.
                edge.cross(-a) >= -tol * edge.norm()
            }),
        }
    }

    fn support_point(&self, dir: Vec2) -> Vec2 {
        let mut best = self.vertices[0];
        for &v in &self.vertices[1..] {
            if v.dot(dir) > best.dot(dir) {
                best = v;
            }
        }
        best
    }
}

fn segment_distance_to_origin(a: Vec2, b: Vec2) -> f64 {
    let ab = b - a;
    let len2 = ab.dot(ab);
    let t = if len2 == 0.0 { 0.0 } else { (-a).dot(ab) / len2 };
    (a + ab * t.clamp(0.0, 1.0)).norm()
}

/// `{center + Σ_k s_k g_k : s_k ∈ [-1, 1]}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Zonotope {
    center: Vec2,
    generators: Vec<Vec2>,
}

impl Zonotope {
    /// Zero generators are dropped.
    pub fn new(center: Vec2, generators: impl IntoIterator<Item = Vec2>) -> Self {
        Self {
            center,
            generators: generators.into_iter().filter(|g| *g != Vec2::ZERO).collect(),
        }
    }

    pub fn center(&self) -> Vec2 {
        self.center
    }

    pub fn generators(&self) -> &[Vec2] {
        &self.generators
    }

    fn reach(&self, dir: Vec2) -> f64 {
        self.generators.iter().map(|g| g.dot(dir).abs()).sum()
    }

    // A planar zonotope's facet normals are its generator perpendiculars, so
    // checking those (plus the axes, for the degenerate cases) is exact.
    fn contains_origin_within(&self, tol: f64) -> bool {
        let axes = [Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)];
        self.generators
            .iter()
            .map(|g| g.perp())
            .chain(axes)
            .all(|dir| (-self.center).dot(dir).abs() <= self.reach(dir) + tol * dir.norm())
    }

    fn support_point(&self, dir: Vec2) -> Vec2 {
        self.generators.iter().fold(self.center, |acc, &g| {
            let s = g.dot(dir);
            if s > 0.0 {
                acc + g
            } else if s < 0.0 {
                acc - g
            } else {
                acc
            }
        })
    }
}

/// Bounding polytope of a system's image over its canonical square.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundingPolytope {
    Hull(ControlHull),
    Zonotope(Zonotope),
}

impl BoundingPolytope {
    /// Exact membership of the origin; boundary counts as inside.
    pub fn contains_origin(&self) -> bool {
        self.contains_origin_within(0.0)
    }

    /// Origin membership after growing the polytope by `tol` (Euclidean).
    pub fn contains_origin_within(&self, tol: f64) -> bool {
        match self {
            BoundingPolytope::Hull(h) => h.contains_origin_within(tol),
            BoundingPolytope::Zonotope(z) => z.contains_origin_within(tol),
        }
    }

    /// Membership of an arbitrary point, via translation.
    pub fn contains_point_within(&self, p: Vec2, tol: f64) -> bool {
        self.translated(-p).contains_origin_within(tol)
    }

    /// Support function `h_P(δ) = max_{x ∈ P} ⟨δ, x⟩`.
    pub fn support(&self, dir: Vec2) -> Result<f64, BoundingError> {
        Ok(self.support_point(dir)?.dot(dir))
    }

    /// An extreme point of `P` in direction `dir`.
    pub fn support_point(&self, dir: Vec2) -> Result<Vec2, BoundingError> {
        if dir == Vec2::ZERO || !dir.is_finite() {
            return Err(BoundingError::ZeroDirection);
        }
        Ok(match self {
            BoundingPolytope::Hull(h) => h.support_point(dir),
            BoundingPolytope::Zonotope(z) => z.support_point(dir),
        })
    }

    pub fn translated(&self, offset: Vec2) -> Self {
        match self {
            BoundingPolytope::Hull(h) => BoundingPolytope::Hull(ControlHull {
                vertices: h.vertices.iter().map(|&v| v + offset).collect(),
            }),
            BoundingPolytope::Zonotope(z) => BoundingPolytope::Zonotope(Zonotope {
                center: z.center + offset,
                generators: z.generators.clone(),
            }),
        }
    }
}

/// Hull of the control points (Bernstein) or the coefficient zonotope
/// (power, Chebyshev).
pub fn bounding_polytope(f: &BivariateSystem) -> BoundingPolytope {
    match f.basis() {
        Basis::Bernstein => BoundingPolytope::Hull(ControlHull::from_points(f.coeffs())),
        Basis::Power | Basis::Chebyshev => {
            BoundingPolytope::Zonotope(Zonotope::new(f.coeffs()[0], f.coeffs()[1..].iter().copied()))
        }
    }
}

/// Closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// `max(|lo|, |hi|)`.
    pub fn magnitude(&self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Interval enclosing the range of a scalar polynomial on its canonical domain.
pub fn bounding_interval(p: &Univariate<f64>) -> Interval {
    interval_from_coeffs(p.basis(), p.coeffs())
}

/// Same as [`bounding_interval`] for a scalar bivariate polynomial over the
/// canonical square.
pub fn bounding_interval_bi(f: &Bivariate<f64>) -> Interval {
    interval_from_coeffs(f.basis(), f.coeffs())
}

// `coeffs[0]` is the coefficient of φ_0 (or φ_0 φ_0), which is ≡ 1 for power/Chebyshev.
fn interval_from_coeffs(basis: Basis, coeffs: &[f64]) -> Interval {
    match basis {
        Basis::Bernstein => Interval {
            lo: coeffs.iter().copied().fold(f64::INFINITY, f64::min),
            hi: coeffs.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        },
        Basis::Power | Basis::Chebyshev => {
            let spread: f64 = coeffs[1..].iter().map(|c| c.abs()).sum();
            Interval {
                lo: coeffs[0] - spread,
                hi: coeffs[0] + spread,
            }
        }
    }
}

/// `ξ_B(n) = Σ_i Π_{j≠i} max(n-j, j) / |i-j|`, bounding Bernstein coefficients
/// by the sup-norm of the polynomial on `[0, 1]`.
pub fn xi_bernstein(n: usize) -> f64 {
    (0..=n)
        .map(|i| {
            (0..=n)
                .filter(|&j| j != i)
                .map(|j| (n - j).max(j) as f64 / i.abs_diff(j) as f64)
                .product::<f64>()
        })
        .sum()
}

/// Univariate coefficient bound `‖c_i‖ <= ξ · max_t ‖f(t)‖` for each basis.
pub fn xi(basis: Basis, n: usize) -> f64 {
    match basis {
        Basis::Bernstein => xi_bernstein(n),
        Basis::Chebyshev => std::f64::consts::SQRT_2,
        Basis::Power => (3f64.powi(n as i32 + 1) - 1.0) / std::f64::consts::SQRT_2,
    }
}

/// `θ(m, n)` with `‖y‖ <= θ max ‖f‖` for every `y` in the bounding polytope.
pub fn theta(basis: Basis, m: usize, n: usize) -> f64 {
    let (mf, nf) = ((m + 1) as f64, (n + 1) as f64);
    match basis {
        Basis::Bernstein => xi_bernstein(m) * xi_bernstein(n),
        Basis::Chebyshev => 2.0 * mf * nf,
        Basis::Power => mf * nf * (3f64.powi(m as i32 + 1) - 1.0) * (3f64.powi(n as i32 + 1) - 1.0) / 2.0,
    }
}

/// `γ(θ) = 1 / (4√(θ(4θ+1)) − 8θ)`, evaluated in the cancellation-free form
/// `(√(θ(4θ+1)) + 2θ) / (4θ)`.
pub fn gamma(theta: f64) -> Result<f64, BoundingError> {
    if theta.is_nan() || theta < 1.0 {
        return Err(BoundingError::ThetaTooSmall(theta));
    }
    Ok(((theta * (4.0 * theta + 1.0)).sqrt() + 2.0 * theta) / (4.0 * theta))
}
