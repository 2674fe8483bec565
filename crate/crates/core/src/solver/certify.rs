//! Exclusion and Kantorovich tests, Lipschitz bounds and zero-ball radii.

use crate::basis::{Axis, BivariateSystem};
use crate::bounding::{bounding_interval_bi, bounding_polytope, gamma};
use crate::linalg::{Mat2, Vec2};
use crate::reparam::{reparametrize, Patch};

use super::{SolverConfig, SolverError};

/// Largest radius tried when searching for `ρ*`.
pub const RHO_CAP: f64 = 4.0;

/// A system together with the partial derivatives the tests need.
#[derive(Debug, Clone)]
pub(crate) struct Derivatives {
    pub fu: BivariateSystem,
    pub fv: BivariateSystem,
    pub fuu: BivariateSystem,
    pub fuv: BivariateSystem,
    pub fvv: BivariateSystem,
}

impl Derivatives {
    pub fn new(f: &BivariateSystem) -> Self {
        let fu = f.derivative(Axis::U);
        let fv = f.derivative(Axis::V);
        Self {
            fuu: fu.derivative(Axis::U),
            fuv: fu.derivative(Axis::V),
            fvv: fv.derivative(Axis::V),
            fu,
            fv,
        }
    }

    pub fn jacobian(&self, p: Vec2) -> Mat2 {
        BivariateSystem::jacobian_from(&self.fu, &self.fv, p)
    }

    /// Mean-value bound on the ∞-norm Lipschitz constant of `x ↦ A f′(x)`
    /// over `ball`: `max_i (M_uu + 2 M_uv + M_vv)` where `M` bounds the
    /// second partials of row `i` of `A f`.
    pub fn lipschitz(&self, a: &Mat2, ball: &Patch) -> f64 {
        let mags = |g: &BivariateSystem| -> [f64; 2] {
            let h = reparametrize(&g.transform(a), ball, true).expect("ball radius already validated");
            [
                bounding_interval_bi(&h.component(0)).magnitude(),
                bounding_interval_bi(&h.component(1)).magnitude(),
            ]
        };
        let uu = mags(&self.fuu);
        let uv = mags(&self.fuv);
        let vv = mags(&self.fvv);
        (0..2).map(|i| uu[i] + 2.0 * uv[i] + vv[i]).fold(0.0, f64::max)
    }
}

/// `true` when the bounding polytope of `f` restricted to `patch` misses the
/// origin, which proves `f` has no zero there.
pub fn exclusion_test(f: &BivariateSystem, patch: &Patch) -> Result<bool, SolverError> {
    let g = reparametrize(f, patch, false)?;
    Ok(!bounding_polytope(&g).contains_origin())
}

/// Upper bound on the Lipschitz constant of `x ↦ jac_inv · f′(x)` over `ball`.
pub fn lipschitz_bound(f: &BivariateSystem, jac_inv: &Mat2, ball: &Patch) -> Result<f64, SolverError> {
    if !jac_inv.is_finite() {
        return Err(SolverError::NonFiniteJacobian);
    }
    Ok(Derivatives::new(f).lipschitz(jac_inv, ball))
}

/// Quantities computed by the Kantorovich test at a patch center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KantorovichOutcome {
    /// `‖f′(x⁰)⁻¹ f(x⁰)‖_∞`.
    pub eta: f64,
    /// Lipschitz bound over `B̄(x⁰, 2γr)`.
    pub omega: f64,
    pub rho_minus: f64,
    pub passed: bool,
    /// `B̄(x⁰, ρ₋) ⊆ [−γ, 1+γ]²`.
    pub ball_in_dprime: bool,
}

impl KantorovichOutcome {
    fn singular() -> Self {
        Self {
            eta: f64::INFINITY,
            omega: f64::INFINITY,
            rho_minus: f64::INFINITY,
            passed: false,
            ball_in_dprime: false,
        }
    }
}

/// Smaller Kantorovich radius `(1 − √(1 − 2h)) / ω` with `h = ηω`, written
/// without cancellation. Infinite when `h > 1/2`.
pub fn rho_minus(eta: f64, omega: f64) -> f64 {
    let h = eta * omega;
    if omega == 0.0 {
        eta
    } else if h <= 0.5 {
        2.0 * eta / (1.0 + (1.0 - 2.0 * h).sqrt())
    } else {
        f64::INFINITY
    }
}

/// Kantorovich test at the center of `patch`, with Lipschitz domain
/// `B̄(x⁰, 2γ(θ)r)`.
///
/// Passing needs `ηω ≤ 1/4`, `B̄(x⁰, ρ₋) ⊆ D′ = [−γ, 1+γ]²`, and
/// `ρ₋ ≤ 2γr` so the Newton ball stays where `ω` is valid.
pub fn kantorovich_test(
    f: &BivariateSystem,
    patch: &Patch,
    theta: f64,
    _cfg: &SolverConfig,
) -> Result<KantorovichOutcome, SolverError> {
    let d = Derivatives::new(f);
    kantorovich_with(f, &d, patch, gamma(theta)?)
}

pub(crate) fn kantorovich_with(
    f: &BivariateSystem,
    d: &Derivatives,
    patch: &Patch,
    gamma: f64,
) -> Result<KantorovichOutcome, SolverError> {
    let x0 = patch.center();
    let Some(jinv) = d.jacobian(x0).inverse() else {
        return Ok(KantorovichOutcome::singular());
    };
    let eta = (jinv * f.eval_at(x0)).norm_inf();
    let reach = 2.0 * gamma * patch.half_width();
    let omega = d.lipschitz(&jinv, &patch.scaled(2.0 * gamma)?);
    let rho = rho_minus(eta, omega);
    let ball_in_dprime = rho.is_finite()
        && [x0.x, x0.y]
            .iter()
            .all(|&c| c - rho >= -gamma && c + rho <= 1.0 + gamma);
    let passed = eta.is_finite() && eta * omega <= 0.25 && ball_in_dprime && rho <= reach;
    Ok(KantorovichOutcome {
        eta,
        omega,
        rho_minus: rho,
        passed,
        ball_in_dprime,
    })
}

/// `(ρ*, ω*)` at a zero: the fixed point of `ρ = 2 / ω̂(ρ)`, where `ω̂(ρ)` is
/// the Lipschitz bound over `B̄(x*, ρ)`, capped at [`RHO_CAP`].
pub fn rho_star(f: &BivariateSystem, xstar: Vec2, cfg: &SolverConfig) -> Result<(f64, f64), SolverError> {
    rho_star_with(&Derivatives::new(f), xstar, cfg)
}

pub(crate) fn rho_star_with(d: &Derivatives, xstar: Vec2, cfg: &SolverConfig) -> Result<(f64, f64), SolverError> {
    let jinv = d
        .jacobian(xstar)
        .inverse()
        .ok_or(SolverError::SingularJacobian(xstar))?;
    let omega_at = |rho: f64| -> Result<f64, SolverError> { Ok(d.lipschitz(&jinv, &Patch::new(xstar, rho)?)) };

    let cap_omega = omega_at(RHO_CAP)?;
    if cap_omega == 0.0 || RHO_CAP * cap_omega <= 2.0 {
        return Ok((RHO_CAP, cap_omega));
    }
    // ρ·ω̂(ρ) is nondecreasing; keep `lo` on the feasible side.
    let (mut lo, mut hi) = (0.0, RHO_CAP);
    for _ in 0..cfg.rho_search_iters {
        let mid = 0.5 * (lo + hi);
        if mid * omega_at(mid)? <= 2.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if lo == 0.0 {
        return Err(SolverError::DegenerateZeroBall(xstar));
    }
    Ok((lo, omega_at(lo)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{Basis, Bivariate};
    use crate::bounding::theta;

    fn affine(basis: Basis, shift: f64) -> BivariateSystem {
        let f = Bivariate::from_fn(Basis::Power, 1, 1, |i, j| match (i, j) {
            (0, 0) => Vec2::new(-shift, -shift),
            (1, 0) => Vec2::new(1.0, 0.0),
            (0, 1) => Vec2::new(0.0, 1.0),
            _ => Vec2::ZERO,
        });
        f.change_basis(basis).unwrap()
    }

    fn quad(basis: Basis) -> BivariateSystem {
        let mut f = Bivariate::from_fn(Basis::Power, 2, 1, |_, _| Vec2::ZERO);
        *f.coeff_mut(0, 0) = Vec2::new(-0.25, -0.5);
        *f.coeff_mut(2, 0) = Vec2::new(1.0, 0.0);
        *f.coeff_mut(0, 1) = Vec2::new(0.0, 1.0);
        f.change_basis(basis).unwrap()
    }

    #[test]
    fn exclusion_examples() {
        let unit = Patch::unit();
        for basis in Basis::ALL {
            let c = Bivariate::constant(basis, Vec2::new(3.0, -1.0));
            assert!(exclusion_test(&c, &Patch::new(Vec2::new(0.2, 0.7), 0.1).unwrap()).unwrap());
        }
        assert!(!exclusion_test(&affine(Basis::Power, 0.5), &unit).unwrap());
        assert!(exclusion_test(&affine(Basis::Power, -2.0), &unit).unwrap());
    }

    #[test]
    fn lipschitz_of_affine_is_zero() {
        for basis in Basis::ALL {
            let w = lipschitz_bound(&affine(basis, 0.3), &Mat2::IDENTITY, &Patch::unit()).unwrap();
            assert_eq!(w, 0.0);
        }
    }

    #[test]
    fn lipschitz_quadratic_exact() {
        // A f′ has a single varying entry 2u, so the constant is 2.
        let ball = Patch::new(Vec2::new(0.5, 0.5), 0.1).unwrap();
        let w = lipschitz_bound(&quad(Basis::Power), &Mat2::IDENTITY, &ball).unwrap();
        assert!((w - 2.0).abs() < 1e-12);
    }

    #[test]
    fn kantorovich_examples() {
        let cfg = SolverConfig::default();
        for basis in Basis::ALL {
            let f = affine(basis, 0.5);
            let out = kantorovich_test(&f, &Patch::new(Vec2::new(0.5, 0.5), 0.3).unwrap(), 4.0, &cfg).unwrap();
            assert!(out.eta < 1e-15 && out.omega == 0.0 && out.passed);

            let c = Bivariate::constant(basis, Vec2::new(1.0, 2.0));
            let out = kantorovich_test(&c, &Patch::unit(), 4.0, &cfg).unwrap();
            assert!(!out.passed && out.eta.is_infinite());
        }
        let f = quad(Basis::Power);
        let patch = Patch::new(Vec2::new(0.6, 0.6), 0.1).unwrap();
        let out = kantorovich_test(&f, &patch, theta(Basis::Power, 2, 1), &cfg).unwrap();
        assert!(out.passed, "{out:?}");
        assert!(out.eta * out.omega <= 0.25);
    }

    #[test]
    fn rho_minus_limits() {
        assert_eq!(rho_minus(0.3, 0.0), 0.3);
        let (eta, omega) = (0.1f64, 2.0f64);
        let classic = (1.0 - (1.0 - 2.0 * eta * omega).sqrt()) / omega;
        assert!((rho_minus(eta, omega) - classic).abs() < 1e-15);
        assert!(rho_minus(1.0, 1.0).is_infinite());
    }

    #[test]
    fn rho_star_examples() {
        let cfg = SolverConfig::default();
        assert_eq!(
            rho_star(&affine(Basis::Chebyshev, 0.5), Vec2::new(0.5, 0.5), &cfg).unwrap(),
            (RHO_CAP, 0.0)
        );
        for basis in Basis::ALL {
            let f = quad(basis);
            let (rho, omega) = rho_star(&f, Vec2::new(0.5, 0.5), &cfg).unwrap();
            assert!((rho * omega - 2.0).abs() < 1e-3, "{basis}: {rho} {omega}");
            let scaled = f.map(|c| c * 10.0);
            let (rho10, omega10) = rho_star(&scaled, Vec2::new(0.5, 0.5), &cfg).unwrap();
            assert!((rho - rho10).abs() < 1e-9 && (omega - omega10).abs() < 1e-9);
        }
    }
}
