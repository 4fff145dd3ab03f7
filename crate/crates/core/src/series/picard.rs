use alloc::vec;

use super::{kappa_number_series, series_compose, Evaluate, PowerSeries, Variable};
use crate::deformed::{to_kappa_number, Kappa};
use crate::{Error, Result};

pub const MAX_PICARD_ITERATIONS: usize = 20;

/// One Picard iterate for `√(1+κ²x²) f′ + f = 0`, `f(0) = 1`.
///
/// In the κ-number coordinate `u` the equation reads `df/du = −f`, so every
/// iterate is an exact polynomial in `u`.
#[derive(Debug, Clone, PartialEq)]
pub struct PicardIterate {
    n: usize,
    kappa: Kappa,
    polynomial: PowerSeries,
}

impl PicardIterate {
    pub fn index(&self) -> usize {
        self.n
    }

    pub fn kappa(&self) -> Kappa {
        self.kappa
    }

    /// Coefficients in powers of `u`.
    pub fn polynomial(&self) -> &PowerSeries {
        &self.polynomial
    }

    /// Taylor expansion in `x` through `order`, obtained by substituting the
    /// Maclaurin series of `u(x) = arsinh(κx)/κ`.
    pub fn taylor_in_x(&self, order: usize) -> Result<PowerSeries> {
        let inner = kappa_number_series(self.kappa, order)?;
        let outer = PowerSeries::from_raw(Variable::X, self.polynomial.coefficients().to_vec());
        series_compose(&outer, &inner, order)
    }
}

impl Evaluate for PicardIterate {
    fn evaluate_at(&self, k: Kappa, x: f64) -> f64 {
        self.polynomial.evaluate(to_kappa_number(k, x))
    }
}

/// Runs `n` steps of `f_{i+1}(u) = 1 − ∫₀ᵘ f_i(s) ds` from `f₀ = 1`.
pub fn picard_iterate(k: Kappa, n: usize) -> Result<PicardIterate> {
    if n > MAX_PICARD_ITERATIONS {
        return Err(Error::Domain("picard iteration count must be at most 20"));
    }
    let mut f = PowerSeries::from_raw(Variable::U, vec![1.0]);
    for _ in 0..n {
        let mut next = f.integrate();
        for c in next.coefficients.iter_mut() {
            *c = -*c;
        }
        next.coefficients[0] += 1.0;
        f = next;
    }
    Ok(PicardIterate { n, kappa: k, polynomial: f })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::decay_series_solution;

    #[test]
    fn first_iterates() {
        let k = Kappa::new(0.9).unwrap();
        assert_eq!(picard_iterate(k, 0).unwrap().polynomial().coefficients(), &[1.0]);
        assert_eq!(picard_iterate(k, 1).unwrap().polynomial().coefficients(), &[1.0, -1.0]);
        assert_eq!(
            picard_iterate(k, 2).unwrap().polynomial().coefficients(),
            &[1.0, -1.0, 0.5]
        );
        assert!(picard_iterate(k, 21).is_err());
    }

    #[test]
    fn second_iterate_matches_printed_closed_form() {
        // ½ + (κ − arsinh(κx))²/(2κ²)
        let kv = 0.9;
        let k = Kappa::new(kv).unwrap();
        let f2 = picard_iterate(k, 2).unwrap();
        for x in [0.0, 0.3, 1.0, 2.5] {
            let a = libm::asinh(kv * x);
            let printed = 0.5 + (kv - a) * (kv - a) / (2.0 * kv * kv);
            assert!((f2.evaluate_at(k, x) - printed).abs() < 1e-14);
        }
    }

    #[test]
    fn evaluation_example() {
        let k = Kappa::new(0.9).unwrap();
        let f1 = picard_iterate(k, 1).unwrap();
        assert!((f1.evaluate_at(k, 1.0) - 0.101_258_960_385_797_264).abs() < 1e-15);
    }

    #[test]
    fn taylor_agrees_with_power_series_method() {
        for kv in [0.0, 0.3, 0.9] {
            let k = Kappa::new(kv).unwrap();
            for n in 0..=8 {
                let t = picard_iterate(k, n).unwrap().taylor_in_x(n).unwrap();
                let s = decay_series_solution(k, n).unwrap();
                for j in 0..=n {
                    assert!((t.coefficient(j) - s.coefficient(j)).abs() < 1e-12);
                }
            }
        }
    }
}
