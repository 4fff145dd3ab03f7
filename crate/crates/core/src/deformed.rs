//! κ-deformed exponential and logarithm, κ-number coordinates and the
//! κ-differential weight.
//!
//! Every function is even in κ and treats κ = 0 as the exact classical case.

use crate::{Error, Result};

/// Below this |κ| the scaled inverse hyperbolic sine switches to its
/// Maclaurin series when |κx| is also small.
const SMALL_KAPPA: f64 = 1e-4;
const SMALL_ARG: f64 = 0.5;

/// Deformation parameter κ, restricted to the open interval (-1, 1).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Kappa(f64);

impl Kappa {
    /// The classical limit.
    pub const ZERO: Kappa = Kappa(0.0);

    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::Domain("kappa must be finite"));
        }
        if value.abs() >= 1.0 {
            return Err(Error::Domain("kappa out of range: |kappa| must be < 1"));
        }
        Ok(Kappa(value))
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn is_classical(self) -> bool {
        self.0 == 0.0
    }

    pub fn negate(self) -> Self {
        Kappa(-self.0)
    }
}

impl TryFrom<f64> for Kappa {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Kappa::new(value)
    }
}

/// Odd inverse hyperbolic sine, `ln(√(1+z²) + z)`, evaluated on |z| and
/// reflected so negative arguments never subtract nearly equal terms.
pub fn arsinh(z: f64) -> f64 {
    let a = z.abs();
    let r = if a > 1e300 {
        libm::log(a) + core::f64::consts::LN_2
    } else if a > 2.0 {
        libm::log(2.0 * a + 1.0 / (libm::sqrt(a * a + 1.0) + a))
    } else {
        let a2 = a * a;
        libm::log1p(a + a2 / (1.0 + libm::sqrt(1.0 + a2)))
    };
    if z.is_sign_negative() {
        -r
    } else {
        r
    }
}

/// `arsinh(κx)/κ` for tiny κ via the odd series
/// x·Σ (-1)ⁿ (2n)!/(4ⁿ (n!)² (2n+1)) (κx)²ⁿ.
fn arsinh_over_kappa_series(kappa: f64, x: f64) -> f64 {
    let z2 = (kappa * x) * (kappa * x);
    let mut binom = 1.0;
    let mut power = 1.0;
    let mut sum = 1.0;
    for n in 0..200u32 {
        let n = f64::from(n);
        binom *= -(2.0 * n + 1.0) / (2.0 * n + 2.0);
        power *= z2;
        let term = binom * power / (2.0 * n + 3.0);
        sum += term;
        if term.abs() <= f64::EPSILON * 0.25 * sum.abs() {
            break;
        }
    }
    x * sum
}

/// κ-number coordinate `x_{κ} = arsinh(κx)/κ`.
pub fn to_kappa_number(k: Kappa, x: f64) -> f64 {
    let kappa = k.value();
    if kappa == 0.0 {
        x
    } else if kappa.abs() < SMALL_KAPPA && (kappa * x).abs() < SMALL_ARG {
        arsinh_over_kappa_series(kappa, x)
    } else {
        arsinh(kappa * x) / kappa
    }
}

/// Dual coordinate `x^{κ} = sinh(κu)/κ`, the inverse of [`to_kappa_number`].
pub fn from_kappa_number(k: Kappa, u: f64) -> f64 {
    let kappa = k.value();
    if kappa == 0.0 {
        u
    } else {
        libm::sinh(kappa * u) / kappa
    }
}

/// Both κ-number coordinates of a real number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KappaNumber {
    /// `arsinh(κx)/κ`
    pub deformed: f64,
    /// `sinh(κx)/κ`
    pub dual: f64,
}

impl KappaNumber {
    pub fn of(k: Kappa, x: f64) -> Self {
        KappaNumber {
            deformed: to_kappa_number(k, x),
            dual: from_kappa_number(k, x),
        }
    }
}

/// κ-exponential `(√(1+κ²x²) + κx)^{1/κ}`, evaluated as `exp(arsinh(κx)/κ)`.
///
/// Overflows to `+inf` for very large positive `x`, like `exp`.
pub fn kappa_exp(k: Kappa, x: f64) -> f64 {
    if k.is_classical() {
        libm::exp(x)
    } else {
        libm::exp(to_kappa_number(k, x))
    }
}

/// κ-logarithm `(x^κ − x^{−κ})/(2κ)`, evaluated as `sinh(κ ln x)/κ`.
pub fn kappa_ln(k: Kappa, x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain("kappa_ln requires x > 0"));
    }
    let ln = libm::log(x);
    Ok(from_kappa_number(k, ln))
}

/// Jacobian of the κ-number map, `1/√(1+κ²x²)`, always in (0, 1].
pub fn differential_weight(k: Kappa, x: f64) -> f64 {
    1.0 / libm::hypot(1.0, k.value() * x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(v: f64) -> Kappa {
        Kappa::new(v).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn kappa_validation() {
        assert_eq!(k(0.75).value(), 0.75);
        assert!(k(0.0).is_classical());
        assert!(Kappa::new(1.0).is_err());
        assert!(Kappa::new(-1.0).is_err());
        assert!(Kappa::new(f64::NAN).is_err());
        assert!(Kappa::new(f64::INFINITY).is_err());
        assert!(Kappa::try_from(0.999).is_ok());
    }

    #[test]
    fn exp_examples() {
        assert!(rel(kappa_exp(k(0.5), 1.0), 2.618_033_988_749_894_848) < 1e-15);
        for v in [0.0, 0.3, -0.9] {
            assert_eq!(kappa_exp(k(v), 0.0), 1.0);
        }
        assert!(rel(kappa_exp(k(0.0), 1.0), core::f64::consts::E) <= f64::EPSILON);
        assert_eq!(kappa_exp(k(0.5), 1e308), f64::INFINITY);
        assert!(kappa_exp(k(0.5), -1e308) >= 0.0);
    }

    #[test]
    fn ln_examples() {
        let e = core::f64::consts::E;
        assert!(rel(kappa_ln(k(0.5), e).unwrap(), 1.042_190_610_987_494_723) < 1e-15);
        assert_eq!(kappa_ln(k(0.7), 1.0).unwrap(), 0.0);
        assert!(rel(kappa_ln(k(0.5), 2.618_033_988_749_895).unwrap(), 1.0) < 1e-15);
        assert!(kappa_ln(k(0.5), 0.0).is_err());
        assert!(kappa_ln(k(0.5), -2.0).is_err());
        assert!(kappa_ln(k(0.5), f64::NAN).is_err());
    }

    #[test]
    fn ln_is_odd_under_reciprocal() {
        for x in [0.01, 0.5, 3.0, 170.0] {
            let a = kappa_ln(k(0.6), x).unwrap();
            let b = kappa_ln(k(0.6), 1.0 / x).unwrap();
            assert!((a + b).abs() <= 1e-14 * a.abs());
        }
    }

    #[test]
    fn knum_examples() {
        assert_eq!(to_kappa_number(k(0.9), 0.0), 0.0);
        assert!(rel(to_kappa_number(k(0.9), 1.0), 0.898_741_039_614_202_736) < 1e-15);
        assert_eq!(to_kappa_number(k(0.0), 3.5), 3.5);
        assert!(rel(from_kappa_number(k(0.9), 0.898_741_039_614_202_736), 1.0) < 1e-12);
        assert_eq!(from_kappa_number(k(0.4), 0.0), 0.0);
        assert_eq!(from_kappa_number(k(0.0), -2.0), -2.0);
        let n = KappaNumber::of(k(0.0), 1.25);
        assert_eq!((n.deformed, n.dual), (1.25, 1.25));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(differential_weight(k(0.3), 0.0), 1.0);
        assert!((differential_weight(k(0.75), 1.0) - 0.8).abs() < 1e-16);
        assert_eq!(differential_weight(k(0.0), 1e12), 1.0);
        assert!(differential_weight(k(0.9), 1e200) > 0.0);
    }

    #[test]
    fn arsinh_is_odd_and_accurate() {
        for z in [1e-300, 1e-8, 0.3, 1.9, 2.1, 50.0, 1e10, 1e305] {
            assert_eq!(arsinh(-z), -arsinh(z));
            assert!(rel(libm::sinh(arsinh(z)), z) < 4e-16 || z > 700.0);
        }
        assert!(rel(arsinh(0.9), 0.808_866_935_652_782_462) < 2e-16);
        assert!(rel(arsinh(1e305), libm::log(2e305)) < 1e-15);
    }

    #[test]
    fn small_kappa_series_branch_matches_direct() {
        for &kv in &[1e-5, -3e-5, 9e-5] {
            for &x in &[1e-3, 0.7, 4000.0, -4000.0] {
                let series = arsinh_over_kappa_series(kv, x);
                let direct = arsinh(kv * x) / kv;
                assert!(rel(series, direct) < 1e-14, "{kv} {x}");
            }
        }
    }
}
