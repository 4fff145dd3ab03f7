//! Analytic solution routes and direct-substitution residuals.
//!
//! Three independent routes produce the decay solution:
//!
//! - closed form `f0·exp_κ(−βx)`;
//! - quadrature `f0·exp(−∫₀^{βx} dt/√(1+κ²t²))`, the common reduction of
//!   separation of variables, integrating factors, the WKB ansatz and the
//!   method of characteristics;
//! - substitution: `df/du = −f` in the κ-number coordinate `u`, solved
//!   classically (also what the Laplace-transform route yields) and mapped
//!   back through `u = arsinh(κβx)/κ`.

use super::problem::{DecayProblem, LogisticProblem};
use crate::deformed::{kappa_exp, to_kappa_number};
use crate::quadrature::kappa_integral;
use crate::Result;

pub fn closed_form_decay(p: &DecayProblem, x: f64) -> f64 {
    p.f0 * kappa_exp(p.kappa, -p.beta * x)
}

/// Analytic derivative of the closed form, `−β f·w(x)`.
pub fn closed_form_decay_derivative(p: &DecayProblem, x: f64) -> f64 {
    -p.beta * closed_form_decay(p, x) * p.weight(x)
}

pub fn quadrature_decay(p: &DecayProblem, x: f64, tol: f64) -> Result<f64> {
    // ∫₀ˣ β dt/√(1+κ²β²t²) = ∫₀^{βx} ds/√(1+κ²s²)
    let end = p.beta * x;
    let integral = if end >= 0.0 {
        kappa_integral(p.kappa, |_| 1.0, 0.0, end, tol)?
    } else {
        -kappa_integral(p.kappa, |_| 1.0, end, 0.0, tol)?
    };
    Ok(p.f0 * libm::exp(-integral))
}

pub fn substitution_decay(p: &DecayProblem, x: f64) -> f64 {
    let u = to_kappa_number(p.kappa, p.beta * x);
    p.f0 * libm::exp(-u)
}

/// `√(1+κ²β²x²)·f′ + β·f`; zero iff `(f, f′)` satisfies the equation at `x`.
pub fn residual_decay(p: &DecayProblem, f_val: f64, dfdx: f64, x: f64) -> f64 {
    libm::hypot(1.0, p.kappa.value() * p.beta * x) * dfdx + p.beta * f_val
}

/// `1/(1 + C·exp_κ(−x))` with `C = (1−f0)/f0`; `C = 1` for the standard
/// problem.
pub fn logistic_closed_form(lp: &LogisticProblem, x: f64) -> f64 {
    1.0 / (1.0 + lp.odds() * kappa_exp(lp.kappa, -x))
}

/// `f′ = E·w(x)/(1+E)²` with `E = C·exp_κ(−x)`.
pub fn logistic_closed_form_derivative(lp: &LogisticProblem, x: f64) -> f64 {
    let e = lp.odds() * kappa_exp(lp.kappa, -x);
    let w = 1.0 / libm::hypot(1.0, lp.kappa.value() * x);
    e * w / ((1.0 + e) * (1.0 + e))
}

/// `√(1+κ²x²)·f′ − f(1−f)` on the closed form.
pub fn logistic_residual(lp: &LogisticProblem, x: f64) -> f64 {
    let f = logistic_closed_form(lp, x);
    let dfdx = logistic_closed_form_derivative(lp, x);
    libm::hypot(1.0, lp.kappa.value() * x) * dfdx - f * (1.0 - f)
}
