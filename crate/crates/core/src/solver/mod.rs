//! The Kantorovich-test subdivision solver.
//!
//! [`kts_solve`] runs a breadth-first quadtree over `[0, 1]²`. Each patch is
//! either skipped (it lies inside the certified ball of a known zero),
//! excluded by its bounding polytope, or subdivided; along the way the
//! Kantorovich test picks out patch centers from which Newton's method is
//! guaranteed to converge.

mod certify;
mod condition;
mod newton;

pub use certify::{
    exclusion_test, kantorovich_test, lipschitz_bound, rho_minus, rho_star, KantorovichOutcome, RHO_CAP,
};
pub use condition::{condition_estimate, COND_LABEL};
pub use newton::{newton, residual_tolerance, NewtonFailure, NewtonResult};

use std::collections::VecDeque;

use log::{debug, info, trace};

use crate::basis::BivariateSystem;
use crate::bounding::{gamma, theta, BoundingError};
use crate::linalg::Vec2;
use crate::reparam::{Patch, ReparamError};

use certify::{kantorovich_with, rho_star_with, Derivatives};

/// Zeros closer than this to a stored ball are treated as already found.
const DEDUP_FLOOR: f64 = 1e-9;
/// Zeros within this distance of `[0, 1]²` are reported as interior.
const DOMAIN_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SolverError {
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("singular Jacobian at {0:?}")]
    SingularJacobian(Vec2),
    #[error("inverse Jacobian has non-finite entries")]
    NonFiniteJacobian,
    #[error("zero at {0:?} admits no positive certified radius")]
    DegenerateZeroBall(Vec2),
    #[error(transparent)]
    Bounding(#[from] BoundingError),
    #[error(transparent)]
    Reparam(#[from] ReparamError),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Newton stops once `‖f‖_∞ <= newton_tol · (1 + max ‖c_ij‖_∞)`.
    pub newton_tol: f64,
    pub newton_max_iters: usize,
    /// Patches that would split below this half-width are reported unresolved.
    pub min_half_width: f64,
    /// Bisection steps in the `ρ*` search.
    pub rho_search_iters: usize,
    /// Points per axis for sampled bounds.
    pub grid_density: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            newton_tol: 1e-12,
            newton_max_iters: 50,
            min_half_width: 2f64.powi(-40),
            rho_search_iters: 60,
            grid_density: 33,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<(), SolverError> {
        if !(self.newton_tol > 0.0 && self.newton_tol.is_finite()) {
            return Err(SolverError::InvalidConfig("newton_tol must be positive"));
        }
        if self.newton_max_iters == 0 || self.rho_search_iters == 0 {
            return Err(SolverError::InvalidConfig("iteration counts must be positive"));
        }
        if !(self.min_half_width > 0.0 && self.min_half_width < 1.0) {
            return Err(SolverError::InvalidConfig("min_half_width must lie in (0, 1)"));
        }
        if self.grid_density < 2 {
            return Err(SolverError::InvalidConfig("grid_density must be at least 2"));
        }
        Ok(())
    }
}

/// A certified zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroRecord {
    pub location: Vec2,
    /// Radius of the ball around the zero on which `ρ* ω* = 2`.
    pub rho_star: f64,
    pub omega_star: f64,
    pub newton_iterations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Clean,
    /// Some patches hit the width floor without being resolved.
    Unresolved,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SolveReport {
    /// Zeros in `[0, 1]²`, in discovery order.
    pub zeros: Vec<ZeroRecord>,
    /// Zeros outside `[0, 1]²` reached by certified Newton runs.
    pub exterior_zeros: Vec<ZeroRecord>,
    /// Every dequeued patch, including subsumed ones.
    pub patches_examined: usize,
    pub smallest_width: f64,
    pub exclusion_passes: usize,
    pub kantorovich_passes: usize,
    pub skipped_subsumed: usize,
    pub newton_failures: usize,
    pub unresolved: Vec<Patch>,
    pub cond_estimate: Option<f64>,
}

impl SolveReport {
    pub fn status(&self) -> SolveStatus {
        if self.unresolved.is_empty() {
            SolveStatus::Clean
        } else {
            SolveStatus::Unresolved
        }
    }

    /// Fills in [`SolveReport::cond_estimate`] from the interior zeros.
    pub fn attach_condition_estimate(&mut self, f: &BivariateSystem, cfg: &SolverConfig) -> Result<(), SolverError> {
        self.cond_estimate = condition_estimate(f, &self.zeros, cfg)?;
        Ok(())
    }
}

/// Finds every zero of `f` in `[0, 1]²`.
pub fn kts_solve(f: &BivariateSystem, cfg: &SolverConfig) -> Result<SolveReport, SolverError> {
    cfg.validate()?;
    let (m, n) = f.degrees();
    let g = gamma(theta(f.basis(), m, n))?;
    let d = Derivatives::new(f);

    let mut report = SolveReport {
        smallest_width: f64::INFINITY,
        ..SolveReport::default()
    };
    // Certified balls B̄(x*, ρ*) of every zero found, interior or not.
    let mut balls: Vec<(Vec2, f64)> = Vec::new();
    let mut queue = VecDeque::from([Patch::unit()]);

    while let Some(patch) = queue.pop_front() {
        report.patches_examined += 1;
        report.smallest_width = report.smallest_width.min(patch.width());
        let (x0, r) = (patch.center(), patch.half_width());

        if balls.iter().any(|&(c, rho)| (x0 - c).norm_inf() + r <= rho) {
            report.skipped_subsumed += 1;
            trace!("patch {x0:?} r={r:e}: subsumed");
            continue;
        }
        if exclusion_test(f, &patch)? {
            report.exclusion_passes += 1;
            trace!("patch {x0:?} r={r:e}: excluded");
            continue;
        }

        let k = kantorovich_with(f, &d, &patch, g)?;
        if k.passed {
            report.kantorovich_passes += 1;
            trace!(
                "patch {x0:?} r={r:e}: Kantorovich passed (eta={:e}, omega={:e})",
                k.eta,
                k.omega
            );
            match newton::newton_with(f, &d.fu, &d.fv, x0, cfg) {
                Ok(nr) => {
                    let x = nr.point;
                    let known = balls.iter().any(|&(c, rho)| (x - c).norm_inf() <= rho.max(DEDUP_FLOOR));
                    if !known {
                        let (rho, omega) = rho_star_with(&d, x, cfg)?;
                        balls.push((x, rho));
                        let rec = ZeroRecord {
                            location: x,
                            rho_star: rho,
                            omega_star: omega,
                            newton_iterations: nr.iterations,
                        };
                        let inside = [x.x, x.y]
                            .iter()
                            .all(|&t| (-DOMAIN_SLACK..=1.0 + DOMAIN_SLACK).contains(&t));
                        debug!("zero at {x:?}, rho*={rho:e}, interior={inside}");
                        if inside {
                            report.zeros.push(rec);
                        } else {
                            report.exterior_zeros.push(rec);
                        }
                    }
                }
                Err(e) => {
                    report.newton_failures += 1;
                    debug!("Newton from certified center {x0:?} failed: {e}");
                }
            }
        }

        if 0.5 * r < cfg.min_half_width {
            report.unresolved.push(patch);
        } else {
            queue.extend(patch.subdivide());
        }
    }

    info!(
        "{} zero(s), {} patches, smallest width {:e}, {} unresolved",
        report.zeros.len(),
        report.patches_examined,
        report.smallest_width,
        report.unresolved.len()
    );
    Ok(report)
}
