use alloc::vec;
use alloc::vec::Vec;

use super::{series_compose, PowerSeries, Variable};
use crate::deformed::Kappa;
use crate::{Error, Result};

/// Highest truncation order accepted by the series constructors.
pub const MAX_ORDER: usize = 64;

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::Domain("series order must be at most 64"));
    }
    Ok(())
}

/// Generalised binomial coefficients `C(½, m)` for `m = 0..=count`.
fn half_binomials(count: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(count + 1);
    let mut c = 1.0;
    out.push(c);
    for m in 1..=count {
        c *= (0.5 - (m as f64 - 1.0)) / m as f64;
        out.push(c);
    }
    out
}

/// Maclaurin series of `exp(t)`.
pub fn exp_series(order: usize) -> Result<PowerSeries> {
    check_order(order)?;
    let mut c = vec![1.0; order + 1];
    for j in 1..=order {
        c[j] = c[j - 1] / j as f64;
    }
    Ok(PowerSeries::from_raw(Variable::X, c))
}

/// Maclaurin series of `ln(1+x)`.
pub fn ln1p_series(order: usize) -> Result<PowerSeries> {
    check_order(order)?;
    let c = (0..=order)
        .map(|j| match j {
            0 => 0.0,
            _ if j % 2 == 1 => 1.0 / j as f64,
            _ => -1.0 / j as f64,
        })
        .collect();
    Ok(PowerSeries::from_raw(Variable::X, c))
}

/// Maclaurin series of the κ-number map `arsinh(κx)/κ`.
pub fn kappa_number_series(k: Kappa, order: usize) -> Result<PowerSeries> {
    check_order(order)?;
    let k2 = k.value() * k.value();
    let mut c = vec![0.0; order + 1];
    // (-1)ⁿ (2n)!/(4ⁿ n!²) κ²ⁿ, divided by 2n+1
    let mut binom = 1.0;
    let mut n = 0usize;
    while 2 * n + 1 <= order {
        c[2 * n + 1] = binom / (2 * n + 1) as f64;
        binom *= -k2 * (2 * n + 1) as f64 / (2 * n + 2) as f64;
        n += 1;
    }
    Ok(PowerSeries::from_raw(Variable::X, c))
}

/// Maclaurin series of the dual map `sinh(κt)/κ`.
pub fn sinh_kappa_series(k: Kappa, order: usize) -> Result<PowerSeries> {
    check_order(order)?;
    let k2 = k.value() * k.value();
    let mut c = vec![0.0; order + 1];
    let mut term = 1.0;
    let mut j = 1;
    while j <= order {
        c[j] = term;
        term *= k2 / ((j + 1) * (j + 2)) as f64;
        j += 2;
    }
    Ok(PowerSeries::from_raw(Variable::X, c))
}

/// Taylor coefficients of `exp_κ(x)` about 0, built as `exp ∘ (arsinh(κx)/κ)`.
pub fn exp_kappa_taylor(k: Kappa, order: usize) -> Result<PowerSeries> {
    series_compose(&exp_series(order)?, &kappa_number_series(k, order)?, order)
}

/// Taylor coefficients of `ln_κ(1+x)` about 0, built as
/// `(sinh(κ·)/κ) ∘ ln(1+x)`.
pub fn ln_kappa_shifted_taylor(k: Kappa, order: usize) -> Result<PowerSeries> {
    series_compose(&sinh_kappa_series(k, order)?, &ln1p_series(order)?, order)
}

/// Binomial series of `√(1+κ²x²)`; only even powers are nonzero.
pub fn sqrt_weight_series(k: Kappa, order: usize) -> Result<PowerSeries> {
    check_order(order)?;
    let k2 = k.value() * k.value();
    let mut c = vec![0.0; order + 1];
    for (m, b) in half_binomials(order / 2).into_iter().enumerate() {
        c[2 * m] = b * libm::pow(k2, m as f64);
    }
    Ok(PowerSeries::from_raw(Variable::X, c))
}

/// Power-series solution of `√(1+κ²x²) f′ + f = 0`, `f(0) = 1`.
///
/// Matching the coefficient of `xᵖ` after multiplying the trial series'
/// derivative by the binomial series of the square root gives
///
/// ```text
/// (p+1) a_{p+1} = −a_p − Σ_{m≥1} C(½,m) κ^{2m} (p−2m+1) a_{p−2m+1}
/// ```
pub fn decay_series_solution(k: Kappa, order: usize) -> Result<PowerSeries> {
    check_order(order)?;
    let k2 = k.value() * k.value();
    let weights: Vec<f64> = half_binomials(order / 2 + 1)
        .into_iter()
        .enumerate()
        .map(|(m, b)| b * libm::pow(k2, m as f64))
        .collect();
    let mut a = vec![0.0; order + 1];
    a[0] = 1.0;
    for p in 0..order {
        let mut rhs = -a[p];
        let mut m = 1;
        while 2 * m <= p + 1 {
            let idx = p + 1 - 2 * m;
            rhs -= weights[m] * idx as f64 * a[idx];
            m += 1;
        }
        a[p + 1] = rhs / (p + 1) as f64;
    }
    Ok(PowerSeries::from_raw(Variable::X, a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(v: f64) -> Kappa {
        Kappa::new(v).unwrap()
    }

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn exp_taylor_examples() {
        let s = exp_kappa_taylor(k(0.5), 5).unwrap();
        assert!((s.coefficient(5) + 0.0078125).abs() < 1e-16);
        let s = exp_kappa_taylor(k(0.0), 4).unwrap();
        assert_eq!(s.coefficients(), &[1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0]);
        let s = exp_kappa_taylor(k(0.9), 3).unwrap();
        assert!((s.coefficient(3) - 0.19 / 6.0).abs() < 1e-16);
    }

    #[test]
    fn ln_shifted_examples() {
        let s = ln_kappa_shifted_taylor(k(0.5), 3).unwrap();
        assert!((s.coefficient(3) - 0.375).abs() < 1e-16);
        let s = ln_kappa_shifted_taylor(k(0.0), 5).unwrap();
        assert_eq!(s.coefficients(), &[0.0, 1.0, -0.5, 1.0 / 3.0, -0.25, 0.2]);
        let s = ln_kappa_shifted_taylor(k(0.5), 5).unwrap();
        assert!((s.coefficient(5) - 0.273_437_5).abs() < 1e-15);
    }

    #[test]
    fn sqrt_weight_examples() {
        let s = sqrt_weight_series(k(0.9), 4).unwrap();
        assert!(close(s.coefficients(), &[1.0, 0.0, 0.405, 0.0, -0.082_012_5], 1e-16));
        let s = sqrt_weight_series(k(0.0), 7).unwrap();
        assert_eq!(s.coefficients(), &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let s = sqrt_weight_series(k(0.5), 6).unwrap();
        assert_eq!(s.coefficient(6), 0.000_976_562_5);
    }

    #[test]
    fn decay_series_examples() {
        let s = decay_series_solution(k(0.5), 3).unwrap();
        assert!((s.coefficient(3) + 0.125).abs() < 1e-16);
        let s = decay_series_solution(k(0.0), 4).unwrap();
        assert!(close(s.coefficients(), &[1.0, -1.0, 0.5, -1.0 / 6.0, 1.0 / 24.0], 1e-17));
        // mpmath Taylor coefficients of exp_κ(−x) at κ = 0.9
        let expected = [
            1.0,
            -1.0,
            0.5,
            -0.031_666_666_666_666_667,
            -0.093_333_333_333_333_333,
            0.009_959_166_666_666_667,
            0.037_208_888_888_888_889,
            -0.004_564_618_055_555_556,
            -0.018_710_755_555_555_556,
        ];
        let s = decay_series_solution(k(0.9), 8).unwrap();
        assert!(close(s.coefficients(), &expected, 1e-15));
    }

    #[test]
    fn order_limit() {
        assert!(exp_kappa_taylor(k(0.5), 65).is_err());
        assert!(ln_kappa_shifted_taylor(k(0.5), 65).is_err());
        assert!(sqrt_weight_series(k(0.5), 65).is_err());
        assert!(decay_series_solution(k(0.5), 65).is_err());
        assert!(decay_series_solution(k(0.5), 64).is_ok());
        assert_eq!(decay_series_solution(k(0.5), 0).unwrap().coefficients(), &[1.0]);
    }
}
