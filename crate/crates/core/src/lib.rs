//! Kaniadakis κ-deformed mathematics and the κ-deformed decay equation.
//!
//! The crate is `no_std` and only needs `alloc` for series coefficients and
//! solution traces. Transcendental functions come from [`libm`].
//!
//! - [`deformed`]: the validated [`Kappa`] parameter, κ-exponential,
//!   κ-logarithm, κ-number coordinates and the κ-differential weight.
//! - [`algebra`]: κ-sum and κ-product group laws.
//! - [`quadrature`]: adaptive Simpson integration and the κ-integral.
//! - [`series`]: truncated power series, the κ Taylor expansions, the
//!   power-series recurrence for the decay equation and Picard iterates.
//! - [`ode`]: decay and logistic problems, analytic solution routes,
//!   residual checks, slope fields and fixed-step integrators.
//! - [`harness`]: error tables, convergence orders and figure data.
//!
//! ```
//! use kappa::{Kappa, deformed::kappa_exp};
//!
//! let k = Kappa::new(0.5).unwrap();
//! let golden_sq = kappa_exp(k, 1.0);
//! assert!((golden_sq - 2.618_033_988_749_895).abs() < 1e-14);
//! ```

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod deformed;
mod error;
pub mod harness;
pub mod ode;
pub mod quadrature;
pub mod series;
pub mod tolerances;

pub use deformed::{Kappa, KappaNumber};
pub use error::{Error, Result};
