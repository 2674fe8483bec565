//! Control-point hulls, zonotopes and bounding intervals.
//!
//! cargo run --example bounding_polytopes

use kts::basis::{Basis, Bivariate, Univariate};
use kts::bounding::{bounding_interval, bounding_polytope, gamma, theta, xi};
use kts::Vec2;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // f(u, v) = (u - 0.3 + 0.2 uv, v - 0.6 - 0.1 u)
    let power = Bivariate::new(
        Basis::Power,
        1,
        1,
        vec![
            Vec2::new(-0.3, -0.6),
            Vec2::new(0.0, 1.0),
            Vec2::new(1.0, -0.1),
            Vec2::new(0.2, 0.0),
        ],
    )?;

    for basis in Basis::ALL {
        let f = power.change_basis(basis)?;
        let poly = bounding_polytope(&f);
        let width = |d: Vec2| -> Result<f64, kts::bounding::BoundingError> {
            Ok(poly.support(d)? + poly.support(Vec2::new(-d.x, -d.y))?)
        };
        println!(
            "{:<10} origin inside: {:<5}  x-extent {:.4}  y-extent {:.4}  theta {:.3}",
            basis.tag(),
            poly.contains_origin(),
            width(Vec2::new(1.0, 0.0))?,
            width(Vec2::new(0.0, 1.0))?,
            theta(basis, 1, 1)
        );
    }

    println!("\nxi(n) and gamma(theta) for degree (n, n):");
    for n in 1..=6 {
        let g = |b| gamma(theta(b, n, n));
        println!(
            "  n={n}  xi_B {:>8.3}  xi_C {:.3}  xi_P {:>10.1}  gamma_B {:.6}  gamma_C {:.6}",
            xi(Basis::Bernstein, n),
            xi(Basis::Chebyshev, n),
            xi(Basis::Power, n),
            g(Basis::Bernstein)?,
            g(Basis::Chebyshev)?
        );
    }

    let p = Univariate::new(Basis::Power, vec![0.2, -1.5, 1.5])?;
    for basis in [Basis::Bernstein, Basis::Chebyshev] {
        let iv = bounding_interval(&p.convert(basis)?);
        println!("{basis} interval for 0.2 - 1.5t + 1.5t^2: [{:.4}, {:.4}]", iv.lo, iv.hi);
    }
    Ok(())
}
