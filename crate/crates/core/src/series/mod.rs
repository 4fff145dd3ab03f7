//! Truncated power series with real coefficients.
//!
//! A [`PowerSeries`] is a coefficient list `c₀ … c_N` in either the plain
//! variable `x` or the κ-number coordinate `u = arsinh(κx)/κ`. Ring
//! operations truncate at a caller-chosen order.

mod expansions;
mod picard;

use alloc::vec;
use alloc::vec::Vec;

use crate::deformed::{to_kappa_number, Kappa};
use crate::{Error, Result};

pub use expansions::{
    decay_series_solution, exp_kappa_taylor, exp_series, kappa_number_series, ln1p_series,
    ln_kappa_shifted_taylor, sinh_kappa_series, sqrt_weight_series, MAX_ORDER,
};
pub use picard::{picard_iterate, PicardIterate, MAX_PICARD_ITERATIONS};

/// Expansion variable of a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variable {
    /// The plain coordinate `x`.
    X,
    /// The κ-number coordinate `u = arsinh(κx)/κ`.
    U,
}

impl Variable {
    pub fn as_str(self) -> &'static str {
        match self {
            Variable::X => "x",
            Variable::U => "u",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    variable: Variable,
    coefficients: Vec<f64>,
}

impl PowerSeries {
    pub fn new(variable: Variable, coefficients: Vec<f64>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::Domain("a series needs at least one coefficient"));
        }
        if coefficients.iter().any(|c| !c.is_finite()) {
            return Err(Error::Domain("series coefficients must be finite"));
        }
        Ok(PowerSeries { variable, coefficients })
    }

    pub(crate) fn from_raw(variable: Variable, coefficients: Vec<f64>) -> Self {
        debug_assert!(!coefficients.is_empty());
        PowerSeries { variable, coefficients }
    }

    pub fn zero(variable: Variable, order: usize) -> Self {
        PowerSeries { variable, coefficients: vec![0.0; order + 1] }
    }

    pub fn variable(&self) -> Variable {
        self.variable
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// Coefficient of the `j`-th power; zero beyond the truncation order.
    pub fn coefficient(&self, j: usize) -> f64 {
        self.coefficients.get(j).copied().unwrap_or(0.0)
    }

    pub fn into_coefficients(self) -> Vec<f64> {
        self.coefficients
    }

    /// Horner evaluation at a value of the series' own variable.
    pub fn evaluate(&self, t: f64) -> f64 {
        self.coefficients.iter().rev().fold(0.0, |acc, &c| acc * t + c)
    }

    /// Truncates (or zero-pads) to `order`.
    pub fn truncate(&self, order: usize) -> Self {
        let mut coefficients = self.coefficients.clone();
        coefficients.resize(order + 1, 0.0);
        PowerSeries { variable: self.variable, coefficients }
    }

    /// Series with every odd coefficient negated, i.e. `f(−t)`.
    pub fn reflect(&self) -> Self {
        let coefficients = self
            .coefficients
            .iter()
            .enumerate()
            .map(|(j, &c)| if j % 2 == 1 { -c } else { c })
            .collect();
        PowerSeries { variable: self.variable, coefficients }
    }

    /// Term-by-term antiderivative with zero constant; raises the order by one.
    pub fn integrate(&self) -> Self {
        let mut coefficients = Vec::with_capacity(self.coefficients.len() + 1);
        coefficients.push(0.0);
        coefficients.extend(
            self.coefficients.iter().enumerate().map(|(j, &c)| c / (j as f64 + 1.0)),
        );
        PowerSeries { variable: self.variable, coefficients }
    }

    /// Term-by-term derivative; lowers the order by one (order 0 stays 0).
    pub fn derivative(&self) -> Self {
        if self.coefficients.len() == 1 {
            return PowerSeries::zero(self.variable, 0);
        }
        let coefficients = self
            .coefficients
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &c)| c * j as f64)
            .collect();
        PowerSeries { variable: self.variable, coefficients }
    }
}

/// Anything that can be evaluated at a point `x` for a given κ.
pub trait Evaluate {
    fn evaluate_at(&self, k: Kappa, x: f64) -> f64;
}

impl Evaluate for PowerSeries {
    fn evaluate_at(&self, k: Kappa, x: f64) -> f64 {
        match self.variable {
            Variable::X => self.evaluate(x),
            Variable::U => self.evaluate(to_kappa_number(k, x)),
        }
    }
}

/// Evaluates a truncated series at `x`, first mapping `x → u` for series
/// expressed in the κ-number coordinate.
pub fn evaluate_series<S: Evaluate + ?Sized>(s: &S, k: Kappa, x: f64) -> f64 {
    s.evaluate_at(k, x)
}

fn same_variable(a: &PowerSeries, b: &PowerSeries) -> Result<()> {
    if a.variable != b.variable {
        return Err(Error::Domain("series are expressed in different variables"));
    }
    Ok(())
}

/// Sum truncated at `order`.
pub fn series_add(a: &PowerSeries, b: &PowerSeries, order: usize) -> Result<PowerSeries> {
    same_variable(a, b)?;
    let coefficients = (0..=order).map(|j| a.coefficient(j) + b.coefficient(j)).collect();
    Ok(PowerSeries::from_raw(a.variable, coefficients))
}

/// Cauchy product truncated at `order`.
pub fn series_multiply(a: &PowerSeries, b: &PowerSeries, order: usize) -> Result<PowerSeries> {
    same_variable(a, b)?;
    Ok(multiply_unchecked(a, b, order))
}

fn multiply_unchecked(a: &PowerSeries, b: &PowerSeries, order: usize) -> PowerSeries {
    let mut out = vec![0.0; order + 1];
    for (i, &ai) in a.coefficients.iter().enumerate().take(order + 1) {
        if ai == 0.0 {
            continue;
        }
        for (j, &bj) in b.coefficients.iter().enumerate().take(order + 1 - i) {
            out[i + j] += ai * bj;
        }
    }
    PowerSeries::from_raw(a.variable, out)
}

pub fn series_truncate(s: &PowerSeries, order: usize) -> PowerSeries {
    s.truncate(order)
}

/// `outer(inner(t))` truncated at `order`. The result is expressed in the
/// inner series' variable.
///
/// The inner series must have zero constant term, otherwise every output
/// coefficient would depend on the full (untruncated) outer series.
pub fn series_compose(outer: &PowerSeries, inner: &PowerSeries, order: usize) -> Result<PowerSeries> {
    if inner.coefficient(0) != 0.0 {
        return Err(Error::Domain("inner series of a composition must have zero constant term"));
    }
    let inner = inner.truncate(order);
    let mut acc = PowerSeries::zero(inner.variable, order);
    for &c in outer.coefficients.iter().rev() {
        acc = multiply_unchecked(&acc, &inner, order);
        acc.coefficients[0] += c;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(c: &[f64]) -> PowerSeries {
        PowerSeries::new(Variable::X, c.to_vec()).unwrap()
    }

    #[test]
    fn multiply_example() {
        let p = series_multiply(&x(&[1.0, 1.0]), &x(&[1.0, -1.0]), 2).unwrap();
        assert_eq!(p.coefficients(), &[1.0, 0.0, -1.0]);
    }

    #[test]
    fn compose_with_zero_series() {
        let e = exp_series(6).unwrap();
        let z = PowerSeries::zero(Variable::X, 6);
        let c = series_compose(&e, &z, 6).unwrap();
        assert_eq!(c.coefficients(), &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn compose_rejects_constant_inner() {
        let e = exp_series(3).unwrap();
        assert!(series_compose(&e, &x(&[0.5, 1.0]), 3).is_err());
    }

    #[test]
    fn compose_sinh_with_ln1p_matches_shifted_log_series() {
        let k = Kappa::new(0.5).unwrap();
        let c = series_compose(&sinh_kappa_series(k, 5).unwrap(), &ln1p_series(5).unwrap(), 5)
            .unwrap();
        let l = ln_kappa_shifted_taylor(k, 5).unwrap();
        for j in 0..=5 {
            assert!((c.coefficient(j) - l.coefficient(j)).abs() < 1e-15);
        }
    }

    #[test]
    fn mixed_variables_rejected() {
        let u = PowerSeries::new(Variable::U, vec![1.0]).unwrap();
        assert!(series_multiply(&x(&[1.0]), &u, 1).is_err());
        assert!(series_add(&x(&[1.0]), &u, 1).is_err());
    }

    #[test]
    fn construction_checks() {
        assert!(PowerSeries::new(Variable::X, vec![]).is_err());
        assert!(PowerSeries::new(Variable::X, vec![1.0, f64::NAN]).is_err());
        let s = x(&[2.0, 3.0, 4.0]);
        assert_eq!(s.order(), 2);
        assert_eq!(s.evaluate(0.0), 2.0);
        assert_eq!(s.evaluate(2.0), 2.0 + 6.0 + 16.0);
        assert_eq!(s.truncate(4).coefficients(), &[2.0, 3.0, 4.0, 0.0, 0.0]);
        assert_eq!(s.integrate().coefficients(), &[0.0, 2.0, 1.5, 4.0 / 3.0]);
        assert_eq!(s.derivative().coefficients(), &[3.0, 8.0]);
        assert_eq!(s.reflect().coefficients(), &[2.0, -3.0, 4.0]);
    }

    #[test]
    fn u_series_evaluates_through_kappa_number() {
        let k = Kappa::new(0.9).unwrap();
        let s = PowerSeries::new(Variable::U, vec![1.0, -1.0]).unwrap();
        let v = evaluate_series(&s, k, 1.0);
        assert!((v - 0.101_258_960_385_797_264).abs() < 1e-15);
    }
}
