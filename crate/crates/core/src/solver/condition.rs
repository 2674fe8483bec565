use crate::basis::BivariateSystem;
use crate::bounding::{gamma, theta};
use crate::linalg::Vec2;
use crate::reparam::Patch;

use super::certify::Derivatives;
use super::{SolverConfig, SolverError, ZeroRecord};

/// Reported next to the estimate: only real zeros enter the maximum.
pub const COND_LABEL: &str = "estimate (real zeros only)";

/// Condition estimate over the real zeros found: for each zero `x*`, the
/// largest of `ω*`, the Lipschitz bound of `f′(x*)⁻¹ f′` over
/// `D′ = [−γ, 1+γ]²`, and `max_y ‖f′(x*)⁻¹ f′(y)‖_∞` over a grid on `[0, 1]²`.
///
/// `None` when there are no zeros. Complex zeros are ignored, so this can
/// understate the true quantity.
pub fn condition_estimate(
    f: &BivariateSystem,
    zeros: &[ZeroRecord],
    cfg: &SolverConfig,
) -> Result<Option<f64>, SolverError> {
    if zeros.is_empty() {
        return Ok(None);
    }
    let (m, n) = f.degrees();
    let g = gamma(theta(f.basis(), m, n))?;
    let d = Derivatives::new(f);
    let dprime = Patch::new(Vec2::new(0.5, 0.5), 0.5 + g)?;
    let k = cfg.grid_density.max(2);
    let grid: Vec<Vec2> = (0..k)
        .flat_map(|a| (0..k).map(move |b| Vec2::new(a as f64 / (k - 1) as f64, b as f64 / (k - 1) as f64)))
        .collect();
    let jacobians: Vec<_> = grid.iter().map(|&y| d.jacobian(y)).collect();

    let mut best = 0.0f64;
    for z in zeros {
        let jinv = d
            .jacobian(z.location)
            .inverse()
            .ok_or(SolverError::SingularJacobian(z.location))?;
        let omega_d = d.lipschitz(&jinv, &dprime);
        let sampled = jacobians.iter().map(|j| jinv.mul_mat(j).norm_inf()).fold(0.0, f64::max);
        best = best.max(z.omega_star).max(omega_d).max(sampled);
    }
    Ok(Some(best))
}

#[cfg(test)]
mod tests {
    use super::super::kts_solve;
    use super::*;
    use crate::basis::{Basis, Bivariate};

    fn scaled_affine(su: f64) -> BivariateSystem {
        Bivariate::from_fn(Basis::Power, 1, 1, |i, j| match (i, j) {
            (0, 0) => Vec2::new(-0.5 * su, -0.5),
            (1, 0) => Vec2::new(su, 0.0),
            (0, 1) => Vec2::new(0.0, 1.0),
            _ => Vec2::ZERO,
        })
    }

    #[test]
    fn affine_systems_have_unit_condition() {
        let cfg = SolverConfig::default();
        for su in [1.0, 2.0] {
            let f = scaled_affine(su);
            let r = kts_solve(&f, &cfg).unwrap();
            let c = condition_estimate(&f, &r.zeros, &cfg).unwrap().unwrap();
            assert!((c - 1.0).abs() < 1e-12, "{c}");
        }
    }

    #[test]
    fn no_zeros_gives_none() {
        let f = Bivariate::constant(Basis::Chebyshev, Vec2::new(1.0, 0.0));
        assert_eq!(condition_estimate(&f, &[], &SolverConfig::default()).unwrap(), None);
    }
}
