use super::{Basis, BasisError, Coeff};

/// A univariate polynomial `Σ b_i φ_i(t)` in a tagged basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Univariate<T = f64> {
    basis: Basis,
    coeffs: Vec<T>,
}

impl<T: Coeff> Univariate<T> {
    pub fn new(basis: Basis, coeffs: Vec<T>) -> Result<Self, BasisError> {
        if coeffs.is_empty() {
            return Err(BasisError::Empty);
        }
        Ok(Self { basis, coeffs })
    }

    pub fn constant(basis: Basis, value: T) -> Self {
        Self {
            basis,
            coeffs: vec![value],
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Evaluates at any finite `t`, inside or outside the canonical domain.
    pub fn eval(&self, t: f64) -> T {
        eval_coeffs(self.basis, &self.coeffs, t)
    }

    /// Derivative in the same basis; degree drops by one (a constant maps to
    /// the zero constant).
    pub fn derivative(&self) -> Self {
        Self {
            basis: self.basis,
            coeffs: derivative_coeffs(self.basis, &self.coeffs),
        }
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_inf()).fold(0.0, f64::max)
    }
}

pub(crate) fn eval_coeffs<T: Coeff>(basis: Basis, coeffs: &[T], t: f64) -> T {
    match basis {
        Basis::Power => horner(coeffs, t),
        Basis::Bernstein => de_casteljau(coeffs, t),
        Basis::Chebyshev => clenshaw(coeffs, t),
    }
}

fn horner<T: Coeff>(coeffs: &[T], t: f64) -> T {
    coeffs.iter().rev().fold(T::ZERO, |acc, &c| acc * t + c)
}

fn de_casteljau<T: Coeff>(coeffs: &[T], t: f64) -> T {
    let mut work = coeffs.to_vec();
    let s = 1.0 - t;
    for level in (1..work.len()).rev() {
        for i in 0..level {
            work[i] = work[i] * s + work[i + 1] * t;
        }
    }
    work[0]
}

// Backward recurrence b_k = c_k + 2t b_{k+1} - b_{k+2}; result c_0 + t b_1 - b_2.
fn clenshaw<T: Coeff>(coeffs: &[T], t: f64) -> T {
    let n = coeffs.len();
    if n == 1 {
        return coeffs[0];
    }
    let two_t = 2.0 * t;
    let mut b1 = T::ZERO;
    let mut b2 = T::ZERO;
    for &c in coeffs[1..].iter().rev() {
        let b0 = c + b1 * two_t - b2;
        b2 = b1;
        b1 = b0;
    }
    coeffs[0] + b1 * t - b2
}

pub(crate) fn derivative_coeffs<T: Coeff>(basis: Basis, coeffs: &[T]) -> Vec<T> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return vec![T::ZERO];
    }
    match basis {
        Basis::Power => (0..n).map(|i| coeffs[i + 1] * (i + 1) as f64).collect(),
        Basis::Bernstein => (0..n).map(|i| (coeffs[i + 1] - coeffs[i]) * n as f64).collect(),
        Basis::Chebyshev => {
            // d_{k-1} = d_{k+1} + 2k c_k, with d_n = d_{n+1} = 0, then halve d_0.
            let mut d = vec![T::ZERO; n + 2];
            for k in (1..=n).rev() {
                d[k - 1] = d[k + 1] + coeffs[k] * (2 * k) as f64;
            }
            d.truncate(n);
            d[0] = d[0] * 0.5;
            d
        }
    }
}

/// The `n` zeros of `T_n`, `cos((2k-1)π / 2n)` for `k = 1..=n`, in descending order.
pub fn chebyshev_nodes(n: usize) -> Vec<f64> {
    (1..=n)
        .map(|k| ((2 * k - 1) as f64 * std::f64::consts::PI / (2 * n) as f64).cos())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Vec2;
    use approx::assert_abs_diff_eq;

    fn uni(basis: Basis, c: &[f64]) -> Univariate {
        Univariate::new(basis, c.to_vec()).unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(uni(Basis::Chebyshev, &[0.0, 0.0, 1.0]).eval(1.0), 1.0);
        assert_abs_diff_eq!(uni(Basis::Chebyshev, &[0.0, 0.0, 1.0]).eval(0.5), -0.5, epsilon = 1e-15);
        for t in [0.0, 0.13, 0.5, 0.77, 1.0] {
            assert_abs_diff_eq!(uni(Basis::Bernstein, &[1.0, 1.0, 1.0]).eval(t), 1.0, epsilon = 1e-15);
        }
        assert_eq!(uni(Basis::Power, &[1.0, 2.0, 3.0]).eval(2.0), 17.0);
    }

    #[test]
    fn eval_vector_valued() {
        let p = Univariate::new(Basis::Power, vec![Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)]).unwrap();
        assert_eq!(p.eval(3.0), Vec2::new(1.0, 3.0));
    }

    #[test]
    fn empty_rejected() {
        assert_eq!(Univariate::<f64>::new(Basis::Power, vec![]), Err(BasisError::Empty));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(uni(Basis::Power, &[1.0, 2.0, 3.0]).derivative().coeffs(), &[2.0, 6.0]);
        assert_eq!(
            uni(Basis::Chebyshev, &[0.0, 0.0, 1.0]).derivative().coeffs(),
            &[0.0, 4.0]
        );
        assert_eq!(
            uni(Basis::Bernstein, &[0.0, 0.0, 1.0]).derivative().coeffs(),
            &[0.0, 2.0]
        );
        assert_eq!(uni(Basis::Chebyshev, &[5.0]).derivative().coeffs(), &[0.0]);
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let c = [0.3, -1.2, 0.7, 2.0, -0.4, 0.9];
        let h = 1e-6;
        for basis in Basis::ALL {
            let p = uni(basis, &c);
            let dp = p.derivative();
            for t in [-0.8, -0.1, 0.35, 0.9] {
                let fd = (p.eval(t + h) - p.eval(t - h)) / (2.0 * h);
                assert!((dp.eval(t) - fd).abs() <= 1e-5 * fd.abs().max(1.0), "{basis} at {t}");
            }
        }
    }

    #[test]
    fn nodes_examples() {
        assert_abs_diff_eq!(chebyshev_nodes(1)[0], 0.0, epsilon = 1e-16);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let n2 = chebyshev_nodes(2);
        assert_abs_diff_eq!(n2[0], h, epsilon = 1e-15);
        assert_abs_diff_eq!(n2[1], -h, epsilon = 1e-15);
        let n3 = chebyshev_nodes(3);
        let s = 3f64.sqrt() / 2.0;
        assert_abs_diff_eq!(n3[0], s, epsilon = 1e-15);
        assert_abs_diff_eq!(n3[1], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(n3[2], -s, epsilon = 1e-15);
    }
}
