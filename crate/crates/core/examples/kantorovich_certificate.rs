//! Running the exclusion and Kantorovich tests by hand near a known zero.
//!
//! cargo run --example kantorovich_certificate

use kts::basis::{Basis, Bivariate};
use kts::bounding::theta;
use kts::solver::{exclusion_test, kantorovich_test, newton, rho_star};
use kts::{Patch, SolverConfig, Vec2};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = SolverConfig::default();
    // f(u, v) = (u^2 + v^2 - 0.5, u - v), zero at (0.5, 0.5)
    let f = Bivariate::new(
        Basis::Power,
        2,
        2,
        vec![
            Vec2::new(-0.5, 0.0),
            Vec2::new(0.0, -1.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(0.0, 1.0),
            Vec2::new(0.0, 0.0),
            Vec2::new(0.0, 0.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(0.0, 0.0),
            Vec2::new(0.0, 0.0),
        ],
    )?
    .change_basis(Basis::Chebyshev)?;
    let th = theta(f.basis(), 2, 2);

    let far = Patch::new(Vec2::new(0.9, 0.1), 0.05)?;
    println!("exclusion at {:?}: {}", far.center(), exclusion_test(&f, &far)?);

    // Patches closing in on the zero from the lower right.
    for h in [0.4, 0.2, 0.1, 0.05, 0.025] {
        let patch = Patch::new(Vec2::new(0.5 + 0.9 * h, 0.5 - 0.6 * h), h)?;
        let k = kantorovich_test(&f, &patch, th, &cfg)?;
        println!(
            "h = {h:<8} eta {:.3e}  omega {:.3e}  eta*omega {:.3}  rho- {:.3e}  passed {}",
            k.eta,
            k.omega,
            k.eta * k.omega,
            k.rho_minus,
            k.passed
        );
    }

    let z = newton(&f, Vec2::new(0.52, 0.47), &cfg).map_err(|e| format!("{e:?}"))?;
    let (rho, omega) = rho_star(&f, z.point, &cfg)?;
    println!(
        "zero {:?} after {} steps; rho* = {rho:.4}, omega* = {omega:.4}",
        z.point, z.iterations
    );
    Ok(())
}
