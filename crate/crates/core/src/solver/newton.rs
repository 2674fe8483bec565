use crate::basis::{Axis, BivariateSystem};
use crate::linalg::Vec2;

use super::SolverConfig;

/// Why a Newton run stopped without converging.
#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum NewtonFailure {
    #[error("singular Jacobian at {0:?}")]
    Singular(Vec2),
    #[error("iterate or residual became non-finite")]
    NonFinite,
    #[error("no convergence after {0} iterations")]
    MaxIterations(usize),
}

/// A converged Newton run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NewtonResult {
    pub point: Vec2,
    pub iterations: usize,
    pub residual: f64,
}

/// Residual target `tol · (1 + max ‖c_ij‖_∞)`.
pub fn residual_tolerance(f: &BivariateSystem, cfg: &SolverConfig) -> f64 {
    cfg.newton_tol * (1.0 + f.max_coeff_norm())
}

/// Plain Newton iteration `x ← x − f′(x)⁻¹ f(x)` from `x0`.
pub fn newton(f: &BivariateSystem, x0: Vec2, cfg: &SolverConfig) -> Result<NewtonResult, NewtonFailure> {
    let fu = f.derivative(Axis::U);
    let fv = f.derivative(Axis::V);
    newton_with(f, &fu, &fv, x0, cfg)
}

pub(crate) fn newton_with(
    f: &BivariateSystem,
    fu: &BivariateSystem,
    fv: &BivariateSystem,
    x0: Vec2,
    cfg: &SolverConfig,
) -> Result<NewtonResult, NewtonFailure> {
    let tol = residual_tolerance(f, cfg);
    let mut x = x0;
    for it in 0..=cfg.newton_max_iters {
        let r = f.eval_at(x);
        if !r.is_finite() || !x.is_finite() {
            return Err(NewtonFailure::NonFinite);
        }
        let res = r.norm_inf();
        if res <= tol {
            return Ok(NewtonResult {
                point: x,
                iterations: it,
                residual: res,
            });
        }
        if it == cfg.newton_max_iters {
            break;
        }
        let jinv = BivariateSystem::jacobian_from(fu, fv, x)
            .inverse()
            .ok_or(NewtonFailure::Singular(x))?;
        x -= jinv * r;
    }
    Err(NewtonFailure::MaxIterations(cfg.newton_max_iters))
}
