use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::deformed::Kappa;
use crate::{Error, Result};

/// An initial value problem `f′ = G(x, f)` on a closed interval with a known
/// exact solution.
pub trait Problem {
    fn rhs(&self, x: f64, f: f64) -> f64;
    /// Initial point `(x₀, f(x₀))`.
    fn start(&self) -> (f64, f64);
    /// Right end of the integration interval.
    fn end(&self) -> f64;
    fn exact(&self, x: f64) -> f64;
}

/// `√(1+κ²β²x²) f′ + β f = 0` with `f(0) = f0` on `[0, x_max]`.
///
/// With `β = 1` this is the plain κ-decay equation; the solution is
/// `f0·exp_κ(−βx)` for every β.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayProblem {
    pub kappa: Kappa,
    pub beta: f64,
    pub f0: f64,
    pub x_max: f64,
}

impl DecayProblem {
    pub const DEFAULT_X_MAX: f64 = 5.0;

    pub fn new(kappa: Kappa, beta: f64, f0: f64, x_max: f64) -> Result<Self> {
        if !(beta > 0.0 && beta.is_finite()) {
            return Err(Error::Domain("beta must be positive and finite"));
        }
        if !f0.is_finite() {
            return Err(Error::Domain("f0 must be finite"));
        }
        if !(x_max > 0.0 && x_max.is_finite()) {
            return Err(Error::Domain("x_max must be positive and finite"));
        }
        Ok(DecayProblem { kappa, beta, f0, x_max })
    }

    /// Unit rate, unit initial value, `x ∈ [0, 5]`.
    pub fn standard(kappa: Kappa) -> Self {
        DecayProblem { kappa, beta: 1.0, f0: 1.0, x_max: Self::DEFAULT_X_MAX }
    }

    /// `1/√(1+κ²β²x²)`.
    #[inline]
    pub fn weight(&self, x: f64) -> f64 {
        1.0 / libm::hypot(1.0, self.kappa.value() * self.beta * x)
    }
}

impl Problem for DecayProblem {
    fn rhs(&self, x: f64, f: f64) -> f64 {
        -self.beta * f * self.weight(x)
    }

    fn start(&self) -> (f64, f64) {
        (0.0, self.f0)
    }

    fn end(&self) -> f64 {
        self.x_max
    }

    fn exact(&self, x: f64) -> f64 {
        super::closed_form_decay(self, x)
    }
}

/// `√(1+κ²x²) f′ = f(1−f)` on `[−x_max, x_max]` with `f(0) = f0`.
///
/// Numerical runs start from the exact value at `−x_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogisticProblem {
    pub kappa: Kappa,
    pub f0: f64,
    pub x_max: f64,
}

impl LogisticProblem {
    pub fn new(kappa: Kappa, f0: f64, x_max: f64) -> Result<Self> {
        if !(f0 > 0.0 && f0 < 1.0) {
            return Err(Error::Domain("logistic f0 must lie in (0, 1)"));
        }
        if !(x_max > 0.0 && x_max.is_finite()) {
            return Err(Error::Domain("x_max must be positive and finite"));
        }
        Ok(LogisticProblem { kappa, f0, x_max })
    }

    /// `f(0) = ½` on `[−5, 5]`.
    pub fn standard(kappa: Kappa) -> Self {
        LogisticProblem { kappa, f0: 0.5, x_max: 5.0 }
    }

    /// `(1 − f0)/f0`, the multiplier of `exp_κ(−x)` in the closed form.
    pub(crate) fn odds(&self) -> f64 {
        (1.0 - self.f0) / self.f0
    }
}

impl Problem for LogisticProblem {
    fn rhs(&self, x: f64, f: f64) -> f64 {
        f * (1.0 - f) / libm::hypot(1.0, self.kappa.value() * x)
    }

    fn start(&self) -> (f64, f64) {
        (-self.x_max, super::logistic_closed_form(self, -self.x_max))
    }

    fn end(&self) -> f64 {
        self.x_max
    }

    fn exact(&self, x: f64) -> f64 {
        super::logistic_closed_form(self, x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Analytic,
    Euler,
    Ab2,
    Rk4,
}

impl Method {
    pub const NUMERICAL: [Method; 3] = [Method::Euler, Method::Ab2, Method::Rk4];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Analytic => "analytic",
            Method::Euler => "euler",
            Method::Ab2 => "ab2",
            Method::Rk4 => "rk4",
        }
    }

    /// Nominal convergence order, `None` for the exact solution.
    pub fn nominal_order(self) -> Option<f64> {
        match self {
            Method::Analytic => None,
            Method::Euler => Some(1.0),
            Method::Ab2 => Some(2.0),
            Method::Rk4 => Some(4.0),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "analytic" => Ok(Method::Analytic),
            "euler" => Ok(Method::Euler),
            "ab2" | "adams" => Ok(Method::Ab2),
            "rk4" => Ok(Method::Rk4),
            _ => Err(Error::Domain("unknown method (expected analytic, euler, ab2 or rk4)")),
        }
    }
}

/// Output of one solver run on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionTrace {
    pub method: Method,
    pub h: f64,
    pub samples: Vec<(f64, f64)>,
}

impl SolutionTrace {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn last(&self) -> Option<(f64, f64)> {
        self.samples.last().copied()
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.samples.windows(2).all(|w| w[1].1 > w[0].1)
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.samples.windows(2).all(|w| w[1].1 < w[0].1)
    }
}
