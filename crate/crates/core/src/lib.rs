//! Kantorovich-test subdivision (KTS) for bivariate polynomial systems.
//!
//! Given `f : [0, 1]² → ℝ²` written in the power, Bernstein or Chebyshev
//! basis, [`solver::kts_solve`] returns every zero in the unit square, each
//! with a certified ball inside which it is the only zero.
//!
//! The pieces are usable on their own:
//!
//! - [`basis`]: evaluation, derivatives, products and basis conversion.
//! - [`bounding`]: control-point hulls, coefficient zonotopes, bounding
//!   intervals and the tightness constants `ξ`, `θ`, `γ`.
//! - [`reparam`]: restricting a system to a square patch.
//! - [`solver`]: exclusion and Kantorovich tests, Newton, the main loop and
//!   a condition estimate.
//! - [`experiments`]: the interval study and the three-basis benchmark.
//! - [`io`] and [`cli`]: JSON files and the `kts` command.
//!
//! ```
//! use kts::basis::{Basis, Bivariate};
//! use kts::linalg::Vec2;
//! use kts::solver::{kts_solve, SolverConfig};
//!
//! // f(u, v) = (u² − 0.25, v − 0.5) in the power basis.
//! let f = Bivariate::from_fn(Basis::Power, 2, 1, |i, j| match (i, j) {
//!     (0, 0) => Vec2::new(-0.25, -0.5),
//!     (2, 0) => Vec2::new(1.0, 0.0),
//!     (0, 1) => Vec2::new(0.0, 1.0),
//!     _ => Vec2::ZERO,
//! });
//! let report = kts_solve(&f, &SolverConfig::default()).unwrap();
//! assert_eq!(report.zeros.len(), 1);
//! assert!((report.zeros[0].location - Vec2::new(0.5, 0.5)).norm_inf() < 1e-12);
//! ```

pub mod basis;
pub mod bounding;
pub mod cli;
pub mod experiments;
pub mod io;
pub mod linalg;
pub mod reparam;
pub mod solver;

pub use basis::{Basis, Bivariate, BivariateSystem, Univariate};
pub use linalg::{Mat2, Vec2};
pub use reparam::Patch;
pub use solver::{kts_solve, SolveReport, SolverConfig};
