//! Fixed-step explicit integrators.

use alloc::vec::Vec;

use super::problem::{Method, Problem, SolutionTrace};
use crate::{Error, Result};

/// Number of steps `floor(range/h)`, tolerating representation error in
/// `range/h` (e.g. `5/0.1`).
pub fn step_count(range: f64, h: f64) -> usize {
    let q = range / h;
    let r = libm::round(q);
    if (q - r).abs() <= 1e-9 * r.max(1.0) {
        r as usize
    } else {
        libm::floor(q) as usize
    }
}

fn grid<P: Problem>(p: &P, h: f64, max_fraction: f64) -> Result<(f64, f64, usize)> {
    let (x0, f0) = p.start();
    let range = p.end() - x0;
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::Domain("step size h must be positive"));
    }
    if h > range * max_fraction * (1.0 + 1e-12) {
        return Err(Error::Domain("step size h is too large for the interval"));
    }
    Ok((x0, f0, step_count(range, h)))
}

fn rk4_step<P: Problem>(p: &P, x: f64, f: f64, h: f64) -> f64 {
    let k1 = p.rhs(x, f);
    let k2 = p.rhs(x + 0.5 * h, f + 0.5 * h * k1);
    let k3 = p.rhs(x + 0.5 * h, f + 0.5 * h * k2);
    let k4 = p.rhs(x + h, f + h * k3);
    f + h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0
}

/// `f_{n+1} = f_n + h·G(x_n, f_n)`.
pub fn euler_solve<P: Problem>(p: &P, h: f64) -> Result<SolutionTrace> {
    let (x0, mut f, n) = grid(p, h, 1.0)?;
    let mut samples = Vec::with_capacity(n + 1);
    samples.push((x0, f));
    for i in 0..n {
        let x = x0 + i as f64 * h;
        f += h * p.rhs(x, f);
        samples.push((x0 + (i + 1) as f64 * h, f));
    }
    Ok(SolutionTrace { method: Method::Euler, h, samples })
}

/// Two-step Adams–Bashforth, `f_{n+1} = f_n + h(3G_n − G_{n−1})/2`, with
/// the first step taken by RK4.
pub fn ab2_solve<P: Problem>(p: &P, h: f64) -> Result<SolutionTrace> {
    let (x0, f0, n) = grid(p, h, 0.5)?;
    let mut samples = Vec::with_capacity(n + 1);
    samples.push((x0, f0));
    let mut f = rk4_step(p, x0, f0, h);
    samples.push((x0 + h, f));
    let mut g_prev = p.rhs(x0, f0);
    for i in 1..n {
        let x = x0 + i as f64 * h;
        let g = p.rhs(x, f);
        f += h * (3.0 * g - g_prev) / 2.0;
        g_prev = g;
        samples.push((x0 + (i + 1) as f64 * h, f));
    }
    Ok(SolutionTrace { method: Method::Ab2, h, samples })
}

/// Classical four-stage Runge–Kutta.
pub fn rk4_solve<P: Problem>(p: &P, h: f64) -> Result<SolutionTrace> {
    let (x0, mut f, n) = grid(p, h, 1.0)?;
    let mut samples = Vec::with_capacity(n + 1);
    samples.push((x0, f));
    for i in 0..n {
        let x = x0 + i as f64 * h;
        f = rk4_step(p, x, f, h);
        samples.push((x0 + (i + 1) as f64 * h, f));
    }
    Ok(SolutionTrace { method: Method::Rk4, h, samples })
}

/// Exact solution sampled on the same grid the integrators use.
pub fn analytic_trace<P: Problem>(p: &P, h: f64) -> Result<SolutionTrace> {
    let (x0, _, n) = grid(p, h, 1.0)?;
    let samples = (0..=n)
        .map(|i| {
            let x = x0 + i as f64 * h;
            (x, p.exact(x))
        })
        .collect();
    Ok(SolutionTrace { method: Method::Analytic, h, samples })
}

pub fn solve<P: Problem>(p: &P, method: Method, h: f64) -> Result<SolutionTrace> {
    match method {
        Method::Analytic => analytic_trace(p, h),
        Method::Euler => euler_solve(p, h),
        Method::Ab2 => ab2_solve(p, h),
        Method::Rk4 => rk4_solve(p, h),
    }
}
