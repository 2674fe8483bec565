mod common;

use common::{choose, eval, eval_uni, phi};
use kts::basis::{
    bernstein_product, chebyshev_nodes, monomial_to_chebyshev, Axis, Basis, Bivariate, BivariateSystem,
    ConversionMatrix, Univariate,
};
use kts::linalg::Vec2;
use proptest::prelude::*;

fn basis() -> impl Strategy<Value = Basis> {
    prop::sample::select(Basis::ALL.to_vec())
}

fn coeffs(max_len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-5.0f64..5.0, 1..=max_len)
}

fn system(max_deg: usize) -> impl Strategy<Value = BivariateSystem> {
    (basis(), 0..=max_deg, 0..=max_deg).prop_flat_map(|(b, m, n)| {
        prop::collection::vec((-5.0f64..5.0, -5.0f64..5.0), (m + 1) * (n + 1))
            .prop_map(move |c| Bivariate::new(b, m, n, c.into_iter().map(Vec2::from).collect()).unwrap())
    })
}

proptest! {
    #[test]
    fn partition_of_unity(t in 0.0f64..=1.0, n in 0usize..=8) {
        let ones = Univariate::new(Basis::Bernstein, vec![1.0; n + 1]).unwrap();
        prop_assert!((ones.eval(t) - 1.0).abs() <= 1e-12);
        let direct: f64 = (0..=n).map(|k| phi(Basis::Bernstein, k, n, t)).sum();
        prop_assert!((direct - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn chebyshev_bounded(t in -1.0f64..=1.0, k in 0usize..=12) {
        let mut c = vec![0.0; k + 1];
        c[k] = 1.0;
        prop_assert!(Univariate::new(Basis::Chebyshev, c).unwrap().eval(t).abs() <= 1.0 + 1e-12);
    }

    #[test]
    fn univariate_eval_matches_oracle(b in basis(), c in coeffs(9), t in -1.0f64..=1.0) {
        let p = Univariate::new(b, c).unwrap();
        let scale = p.max_coeff_norm() * 2f64.powi(p.degree() as i32 + 1);
        prop_assert!((p.eval(t) - eval_uni(&p, t)).abs() <= 1e-12 * (1.0 + scale));
    }

    #[test]
    fn bivariate_eval_matches_oracle(f in system(5), s in (0.0f64..=1.0, 0.0f64..=1.0)) {
        let got = f.eval(s.0, s.1);
        let want = eval(&f, s.0, s.1);
        prop_assert!((got - want).norm_inf() <= 1e-11 * (1.0 + f.max_coeff_norm()));
    }

    #[test]
    fn derivatives_match_finite_differences(f in system(6), s in (0.05f64..=0.95, 0.05f64..=0.95)) {
        let h = 1e-6;
        for (axis, dir) in [(Axis::U, Vec2::new(h, 0.0)), (Axis::V, Vec2::new(0.0, h))] {
            let p = Vec2::new(s.0, s.1);
            let d = f.derivative(axis).eval_at(p);
            let fd = (f.eval_at(p + dir) - f.eval_at(p - dir)) * (0.5 / h);
            prop_assert!((d - fd).norm_inf() <= 1e-5 * d.norm_inf().max(f.max_coeff_norm()));
        }
    }

    #[test]
    fn convert_preserves_values(f in system(6), src in basis(), dst in basis(), s in (0.0f64..=1.0, 0.0f64..=1.0)) {
        let f = Bivariate::new(src, f.degrees().0, f.degrees().1, f.coeffs().to_vec()).unwrap();
        let g = f.convert(dst).unwrap();
        let (ls, hs) = src.canonical_domain();
        let (lt, ht) = dst.canonical_domain();
        let x = Vec2::new(ls + (hs - ls) * s.0, ls + (hs - ls) * s.1);
        let y = Vec2::new(lt + (ht - lt) * s.0, lt + (ht - lt) * s.1);
        prop_assert!((f.eval_at(x) - g.eval_at(y)).norm_inf() <= 1e-9 * f.max_coeff_norm());
    }

    #[test]
    fn change_basis_keeps_the_variable(f in system(5), dst in basis(), s in (0.0f64..=1.0, 0.0f64..=1.0)) {
        let g = f.change_basis(dst).unwrap();
        prop_assert!((f.eval(s.0, s.1) - g.eval(s.0, s.1)).norm_inf() <= 1e-9 * f.max_coeff_norm());
    }

    #[test]
    fn power_chebyshev_round_trip(c in prop::collection::vec(-5.0f64..5.0, 7)) {
        let p = Univariate::new(Basis::Power, c.clone()).unwrap();
        let back = p.convert(Basis::Chebyshev).unwrap().convert(Basis::Power).unwrap();
        for (a, b) in c.iter().zip(back.coeffs()) {
            prop_assert!((a - b).abs() <= 1e-10);
        }
    }

    #[test]
    fn product_bound_and_values(c in coeffs(5), d in coeffs(5), t in 0.0f64..=1.0) {
        let p = Univariate::new(Basis::Bernstein, c).unwrap();
        let q = Univariate::new(Basis::Bernstein, d).unwrap();
        let pq = bernstein_product(&p, &q).unwrap();
        prop_assert_eq!(pq.degree(), p.degree() + q.degree());
        prop_assert!(pq.max_coeff_norm() <= p.max_coeff_norm() * q.max_coeff_norm() + 1e-12);
        prop_assert!((pq.eval(t) - eval_uni(&p, t) * eval_uni(&q, t)).abs() <= 1e-12 * (1.0 + 25.0));
    }

    #[test]
    fn raise_by_unit_product(c in coeffs(6), t in 0.0f64..=1.0) {
        let one = Univariate::new(Basis::Bernstein, vec![1.0, 1.0]).unwrap();
        let q = Univariate::new(Basis::Bernstein, c).unwrap();
        let raised = bernstein_product(&one, &q).unwrap();
        prop_assert!((raised.eval(t) - q.eval(t)).abs() <= 1e-12 * 10.0);
    }
}

#[test]
fn conversion_matrix_rows() {
    for k in 0..=20 {
        let row = monomial_to_chebyshev(k);
        assert!(row.iter().all(|&d| d >= -1e-15));
        assert!((row.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
        for t in [-1.0, -0.3, 0.2, 0.9] {
            let s: f64 = row.iter().enumerate().map(|(i, d)| d * common::cheb_t(i, t)).sum();
            assert!((s - f64::powi(t, k as i32)).abs() <= 1e-12);
        }
    }
    let m = ConversionMatrix::new(6);
    assert_eq!(m.row(3), monomial_to_chebyshev(3).as_slice());
}

#[test]
fn nodes_and_discrete_orthogonality() {
    for n in 1..=12 {
        for &t in &chebyshev_nodes(n) {
            assert!(common::cheb_t(n, t).abs() <= 1e-12);
        }
    }
    for n in 1..=10 {
        let nodes = chebyshev_nodes(n);
        for i in 0..n {
            for j in 0..n {
                let s: f64 = nodes.iter().map(|&t| common::cheb_t(i, t) * common::cheb_t(j, t)).sum();
                let want = match (i == j, i) {
                    (false, _) => 0.0,
                    (true, 0) => n as f64,
                    _ => n as f64 / 2.0,
                };
                assert!((s - want).abs() <= 1e-10, "n={n} i={i} j={j}");
            }
        }
    }
}

#[test]
fn oracle_binomials_are_exact() {
    assert_eq!(choose(20, 10), 184756.0);
    assert_eq!(kts::basis::binomial(20, 10), 184756.0);
}
