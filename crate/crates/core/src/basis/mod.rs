//! Polynomial representations in the power, Bernstein and Chebyshev bases.
//!
//! A polynomial is a coefficient list (univariate) or a dense row-major
//! coefficient grid (bivariate) tagged with the [`Basis`] it is expressed in.
//! Coefficients are generic over [`Coeff`], which covers scalars (`f64`) and
//! planar vectors ([`Vec2`]); the solver works with `Vec2`-valued systems and
//! falls back to scalar polynomials when it needs bounding intervals.

mod bivariate;
mod conversion;
mod univariate;

pub use bivariate::{Axis, Bivariate, BivariateSystem};
pub(crate) use conversion::substitute_affine;
pub use conversion::{
    bernstein_product, binomial, chebyshev_power_coeffs, monomial_to_chebyshev, ConversionMatrix,
    MAX_BERNSTEIN_CONVERSION_DEGREE,
};
pub use univariate::{chebyshev_nodes, Univariate};

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::linalg::Vec2;

/// The three supported polynomial bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Monomials `t^k`, natural domain `[-1, 1]`.
    Power,
    /// `Z_{k,n}(t) = C(n,k) (1-t)^(n-k) t^k`, natural domain `[0, 1]`.
    Bernstein,
    /// Chebyshev polynomials of the first kind, natural domain `[-1, 1]`.
    Chebyshev,
}

impl Basis {
    pub const ALL: [Basis; 3] = [Basis::Power, Basis::Bernstein, Basis::Chebyshev];

    /// The interval `[l, h]` on which the basis has its bounding properties.
    pub const fn canonical_domain(self) -> (f64, f64) {
        match self {
            Basis::Bernstein => (0.0, 1.0),
            Basis::Power | Basis::Chebyshev => (-1.0, 1.0),
        }
    }

    pub const fn tag(self) -> &'static str {
        match self {
            Basis::Power => "power",
            Basis::Bernstein => "bernstein",
            Basis::Chebyshev => "chebyshev",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Basis {
    type Err = BasisError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "power" => Ok(Basis::Power),
            "bernstein" => Ok(Basis::Bernstein),
            "chebyshev" => Ok(Basis::Chebyshev),
            other => Err(BasisError::UnknownBasis(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BasisError {
    #[error("unknown basis tag `{0}` (expected power, bernstein or chebyshev)")]
    UnknownBasis(String),
    #[error("polynomial needs at least one coefficient")]
    Empty,
    #[error("coefficient grid has {actual} entries, expected {expected} for degrees ({m}, {n})")]
    Shape {
        m: usize,
        n: usize,
        expected: usize,
        actual: usize,
    },
    #[error("degree {degree} exceeds the Bernstein conversion limit of {max}")]
    DegreeLimit { degree: usize, max: usize },
    #[error("operation requires the {expected} basis, got {actual}")]
    WrongBasis { expected: Basis, actual: Basis },
}

/// A coefficient value: a scalar or a planar vector.
pub trait Coeff:
    Copy
    + fmt::Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<f64, Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
{
    const ZERO: Self;

    fn norm_inf(self) -> f64;
}

impl Coeff for f64 {
    const ZERO: f64 = 0.0;

    fn norm_inf(self) -> f64 {
        self.abs()
    }
}

impl Coeff for Vec2 {
    const ZERO: Vec2 = Vec2::ZERO;

    fn norm_inf(self) -> f64 {
        Vec2::norm_inf(self)
    }
}
