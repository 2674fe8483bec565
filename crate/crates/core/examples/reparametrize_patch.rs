//! Restricting a system to a sub-square, then checking it pointwise.
//!
//! cargo run --example reparametrize_patch

use kts::basis::{Basis, Bivariate};
use kts::reparam::{cheb_affine, reparametrize};
use kts::{Patch, Vec2};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let patch = Patch::new(Vec2::new(0.375, 0.625), 0.125)?;
    let f = Bivariate::from_fn(Basis::Power, 2, 3, |i, j| {
        Vec2::new(1.0 / (1 + i + j) as f64, (i as f64) - (j as f64))
    });

    for basis in Basis::ALL {
        let fb = f.change_basis(basis)?;
        let g = reparametrize(&fb, &patch, false)?;
        let (lo, hi) = basis.canonical_domain();
        let s = Vec2::new(lo + 0.25 * (hi - lo), lo + 0.8 * (hi - lo));
        let x = patch.map_from_canonical(basis, s);
        let err = (g.eval_at(s) - fb.eval_at(x)).norm_inf();
        println!(
            "{:<10} g({:.3}, {:.3}) vs f({:.4}, {:.4}): error {err:.1e}",
            basis.tag(),
            s.x,
            s.y,
            x.x,
            x.y
        );
    }

    let quads = patch.subdivide();
    println!("\nChildren of {patch:?}:");
    for q in &quads {
        println!(
            "  center ({:.4}, {:.4}) half-width {}",
            q.center().x,
            q.center().y,
            q.half_width()
        );
    }

    // T_i(a t + b) re-expanded in T_0..T_i.
    let lam = cheb_affine(0.5, 0.25, 3);
    for i in 0..=lam.degree() {
        println!("  row {i}: {:?}", lam.row(i));
    }
    Ok(())
}
