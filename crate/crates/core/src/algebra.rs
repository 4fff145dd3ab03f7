//! κ-sum and κ-product: the two abelian group laws on the reals.
//!
//! Both laws are pulled back from ordinary addition and multiplication
//! through the map `x ↦ arsinh(κx)`.

use crate::deformed::{arsinh, Kappa};
use crate::{Error, Result};

/// `x ⊕ y = x√(1+κ²y²) + y√(1+κ²x²)`. Identity 0, inverse `-x`.
pub fn kappa_sum(k: Kappa, x: f64, y: f64) -> f64 {
    let kappa = k.value();
    x * libm::hypot(1.0, kappa * y) + y * libm::hypot(1.0, kappa * x)
}

/// Same law through its hyperbolic form, `sinh(arsinh(κx) + arsinh(κy))/κ`.
/// Kept as a second route for cross-checking [`kappa_sum`].
pub fn kappa_sum_hyperbolic(k: Kappa, x: f64, y: f64) -> f64 {
    let kappa = k.value();
    if kappa == 0.0 {
        return x + y;
    }
    libm::sinh(arsinh(kappa * x) + arsinh(kappa * y)) / kappa
}

/// `x ⊗ y = sinh(arsinh(κx)·arsinh(κy))/κ`.
///
/// The law is undefined at κ = 0; see [`kappa_product_or_classical`].
pub fn kappa_product(k: Kappa, x: f64, y: f64) -> Result<f64> {
    let kappa = k.value();
    if kappa == 0.0 {
        return Err(Error::Domain("kappa_product is undefined at kappa = 0"));
    }
    Ok(libm::sinh(arsinh(kappa * x) * arsinh(kappa * y)) / kappa)
}

/// [`kappa_product`], falling back to the ordinary product `x·y` at κ = 0.
pub fn kappa_product_or_classical(k: Kappa, x: f64, y: f64) -> f64 {
    if k.is_classical() {
        x * y
    } else {
        libm::sinh(arsinh(k.value() * x) * arsinh(k.value() * y)) / k.value()
    }
}

/// Identity of ⊗: the element `I` with `arsinh(κI) = 1`, i.e. `sinh(1)/κ`.
pub fn product_identity(k: Kappa) -> Result<f64> {
    if k.is_classical() {
        return Err(Error::Domain("kappa_product is undefined at kappa = 0"));
    }
    Ok(libm::sinh(1.0) / k.value())
}

/// Inverse of `x` under ⊗, `sinh(1/arsinh(κx))/κ`. Zero has no inverse.
pub fn product_inverse(k: Kappa, x: f64) -> Result<f64> {
    if k.is_classical() {
        return Err(Error::Domain("kappa_product is undefined at kappa = 0"));
    }
    if x == 0.0 {
        return Err(Error::Domain("zero has no kappa-product inverse"));
    }
    Ok(libm::sinh(1.0 / arsinh(k.value() * x)) / k.value())
}
