use super::univariate::{derivative_coeffs, eval_coeffs};
use super::{Basis, BasisError, Coeff};
use crate::linalg::{Mat2, Vec2};

/// Parameter direction of a bivariate polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    U,
    V,
}

/// `f(u, v) = Σ_i Σ_j c_ij φ_i(u) φ_j(v)` with `0 <= i <= m`, `0 <= j <= n`.
///
/// Coefficients are stored densely, row-major in `i`: entry `(i, j)` lives at
/// `i * (n + 1) + j`. The variables `u`, `v` are the solve coordinates; the
/// basis functions are evaluated at them directly.
#[derive(Debug, Clone, PartialEq)]
pub struct Bivariate<T = Vec2> {
    basis: Basis,
    m: usize,
    n: usize,
    coeffs: Vec<T>,
}

/// A map `ℝ² → ℝ²` whose zeros are sought.
pub type BivariateSystem = Bivariate<Vec2>;

impl<T: Coeff> Bivariate<T> {
    pub fn new(basis: Basis, m: usize, n: usize, coeffs: Vec<T>) -> Result<Self, BasisError> {
        let expected = (m + 1) * (n + 1);
        if coeffs.len() != expected {
            return Err(BasisError::Shape {
                m,
                n,
                expected,
                actual: coeffs.len(),
            });
        }
        Ok(Self { basis, m, n, coeffs })
    }

    pub fn from_fn(basis: Basis, m: usize, n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut coeffs = Vec::with_capacity((m + 1) * (n + 1));
        for i in 0..=m {
            for j in 0..=n {
                coeffs.push(f(i, j));
            }
        }
        Self { basis, m, n, coeffs }
    }

    /// The constant polynomial: `c_00 = value` in every basis (`φ_0 ≡ 1`).
    pub fn constant(basis: Basis, value: T) -> Self {
        Self {
            basis,
            m: 0,
            n: 0,
            coeffs: vec![value],
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// `(m, n)`: degrees in `u` and `v`.
    pub fn degrees(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize) -> T {
        self.coeffs[i * (self.n + 1) + j]
    }

    pub fn coeff_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.coeffs[i * (self.n + 1) + j]
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_inf()).fold(0.0, f64::max)
    }

    pub fn eval(&self, u: f64, v: f64) -> T {
        let row_values: Vec<T> = self
            .coeffs
            .chunks_exact(self.n + 1)
            .map(|row| eval_coeffs(self.basis, row, v))
            .collect();
        eval_coeffs(self.basis, &row_values, u)
    }

    pub fn eval_at(&self, p: Vec2) -> T {
        self.eval(p.x, p.y)
    }

    /// Partial derivative in the same basis.
    pub fn derivative(&self, axis: Axis) -> Self {
        self.map_axis(axis, |c| derivative_coeffs(self.basis, c))
    }

    /// Applies a coefficient-wise map, keeping basis and shape.
    pub fn map<U: Coeff>(&self, f: impl Fn(T) -> U) -> Bivariate<U> {
        Bivariate {
            basis: self.basis,
            m: self.m,
            n: self.n,
            coeffs: self.coeffs.iter().map(|&c| f(c)).collect(),
        }
    }

    /// Adds a constant to the function (not to the coefficients).
    pub fn add_constant(&self, value: T) -> Self {
        let mut out = self.clone();
        match self.basis {
            // Partition of unity: every control point moves.
            Basis::Bernstein => out.coeffs.iter_mut().for_each(|c| *c += value),
            Basis::Power | Basis::Chebyshev => out.coeffs[0] += value,
        }
        out
    }

    /// Transforms every coefficient line along `axis` with `f`. For `Axis::U`
    /// the lines are the columns `(c_0j, …, c_mj)`; for `Axis::V` the rows.
    /// `f` must return lines of a common length.
    pub(crate) fn map_axis(&self, axis: Axis, mut f: impl FnMut(&[T]) -> Vec<T>) -> Self {
        self.map_axis_to(self.basis, axis, &mut f)
    }

    pub(crate) fn map_axis_to(&self, basis: Basis, axis: Axis, f: &mut impl FnMut(&[T]) -> Vec<T>) -> Self {
        let (m, n) = (self.m, self.n);
        match axis {
            Axis::V => {
                let rows: Vec<Vec<T>> = self.coeffs.chunks_exact(n + 1).map(&mut *f).collect();
                let new_n = rows[0].len() - 1;
                Bivariate {
                    basis,
                    m,
                    n: new_n,
                    coeffs: rows.into_iter().flatten().collect(),
                }
            }
            Axis::U => {
                let mut line = Vec::with_capacity(m + 1);
                let cols: Vec<Vec<T>> = (0..=n)
                    .map(|j| {
                        line.clear();
                        line.extend((0..=m).map(|i| self.coeffs[i * (n + 1) + j]));
                        f(&line)
                    })
                    .collect();
                let new_m = cols[0].len() - 1;
                Bivariate::from_fn(basis, new_m, n, |i, j| cols[j][i])
            }
        }
    }
}

impl Bivariate<Vec2> {
    /// Jacobian `f'(u, v)` from precomputed partials `fu`, `fv`.
    pub fn jacobian_from(fu: &Self, fv: &Self, p: Vec2) -> Mat2 {
        Mat2::from_columns(fu.eval_at(p), fv.eval_at(p))
    }

    /// Left-multiplies every coefficient by `a` (the system `A·f`).
    pub fn transform(&self, a: &Mat2) -> Self {
        self.map(|c| a.mul_vec(c))
    }

    /// Scalar component polynomial (`0` for x, `1` for y).
    pub fn component(&self, k: usize) -> Bivariate<f64> {
        self.map(|c| if k == 0 { c.x } else { c.y })
    }
}
