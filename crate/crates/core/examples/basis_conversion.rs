//! Converting one polynomial between power, Bernstein and Chebyshev form.
//!
//! cargo run --example basis_conversion

use kts::basis::{monomial_to_chebyshev, Basis, Univariate};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // p(t) = 1 - 3t + 2t^3
    let p = Univariate::new(Basis::Power, vec![1.0, -3.0, 0.0, 2.0])?;

    println!("Same variable, three bases:");
    for basis in Basis::ALL {
        let q = p.change_basis(basis)?;
        println!("  {:<10} {:?}  q(0.3) = {:.12}", basis.tag(), q.coeffs(), q.eval(0.3));
    }

    // `convert` also maps between canonical domains: power lives on [-1,1],
    // Bernstein on [0,1], so t = 0.3 corresponds to s = 0.65.
    let b = p.convert(Basis::Bernstein)?;
    println!("\nDomain-mapped Bernstein: {:?}", b.coeffs());
    println!("  p(0.3) = {:.12}, b(0.65) = {:.12}", p.eval(0.3), b.eval(0.65));

    println!("\nt^k in Chebyshev form:");
    for k in 0..=5 {
        println!("  t^{k} = {:?}", monomial_to_chebyshev(k));
    }
    Ok(())
}
