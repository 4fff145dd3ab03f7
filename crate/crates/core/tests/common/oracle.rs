//! Reference values computed without going through the crate's series
//! composition or recurrence.

#![allow(dead_code)]

/// Maclaurin coefficients of `−arsinh(κx)/κ` from the closed binomial
/// formula, coefficient by coefficient.
fn neg_kappa_number_coefficients(kappa: f64, order: usize) -> Vec<f64> {
    let mut c = vec![0.0; order + 1];
    for n in 0..=order / 2 {
        let j = 2 * n + 1;
        if j > order {
            break;
        }
        // (2n)! / (4ⁿ (n!)²)
        let mut central = 1.0;
        for i in 1..=n {
            central *= (n + i) as f64 / (4.0 * i as f64);
        }
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        c[j] = -sign * central * kappa.powi(2 * n as i32) / j as f64;
    }
    c
}

/// `exp(a(x))` for a series with `a₀ = 0`, via `b′ = a′ b`:
/// `b_n = (1/n) Σ_{k=1..n} k a_k b_{n−k}`.
fn exp_of_series(a: &[f64]) -> Vec<f64> {
    let mut b = vec![0.0; a.len()];
    b[0] = 1.0;
    for n in 1..a.len() {
        let s: f64 = (1..=n).map(|k| k as f64 * a[k] * b[n - k]).sum();
        b[n] = s / n as f64;
    }
    b
}

/// Taylor coefficients of `exp_κ(−x)` through `order`.
pub fn decay_taylor(kappa: f64, order: usize) -> Vec<f64> {
    exp_of_series(&neg_kappa_number_coefficients(kappa, order))
}

/// Taylor coefficients of `exp_κ(x)` through `order`.
pub fn exp_kappa_taylor(kappa: f64, order: usize) -> Vec<f64> {
    decay_taylor(kappa, order)
        .into_iter()
        .enumerate()
        .map(|(j, c)| if j % 2 == 1 { -c } else { c })
        .collect()
}

/// The first six printed Taylor coefficients of `exp_κ(x)`.
pub fn printed_exp_coefficients(kappa: f64) -> [f64; 6] {
    let k2 = kappa * kappa;
    [
        1.0,
        1.0,
        0.5,
        (1.0 - k2) / 6.0,
        (1.0 - 4.0 * k2) / 24.0,
        (1.0 - k2) * (1.0 - 9.0 * k2) / 120.0,
    ]
}

/// The printed coefficients 1..=5 of `ln_κ(1+x)`.
pub fn printed_ln1p_coefficients(kappa: f64) -> [f64; 5] {
    let k2 = kappa * kappa;
    [
        1.0,
        -0.5,
        (1.0 + k2 / 2.0) / 3.0,
        -(1.0 + k2) / 4.0,
        (24.0 + 35.0 * k2 + k2 * k2) / 120.0,
    ]
}

/// The printed power-series solution coefficients 0..=4.
pub fn printed_decay_coefficients(kappa: f64) -> [f64; 5] {
    let k2 = kappa * kappa;
    [1.0, -1.0, 0.5, (k2 - 1.0) / 6.0, (1.0 - 4.0 * k2) / 24.0]
}

/// `1/j!` alternating: the u-coefficients every Picard iterate must carry.
pub fn truncated_exp_neg(n: usize) -> Vec<f64> {
    let mut c = vec![1.0; n + 1];
    for j in 1..=n {
        c[j] = -c[j - 1] / j as f64;
    }
    c
}

/// `n` log-spaced points strictly inside `(lo, hi)`.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (1..=n).map(|i| (a + (b - a) * i as f64 / (n + 1) as f64).exp()).collect()
}

pub fn rel_err(actual: f64, expected: f64) -> f64 {
    if expected == 0.0 {
        actual.abs()
    } else {
        ((actual - expected) / expected).abs()
    }
}

/// Relative error scaled by `max(|a|, |b|, 1)`, for group-law checks whose
/// exact result can be zero.
pub fn scaled_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}
