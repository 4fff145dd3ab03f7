//! Error tables, convergence-order fits and figure data.
//!
//! Reports are deterministic: error tables are sorted by (method, h) and
//! every grid is processed in order.

use alloc::vec::Vec;
use core::fmt;

use crate::deformed::{kappa_exp, Kappa};
use crate::ode::{solve, Method, Problem};
use crate::series::{decay_series_solution, evaluate_series, picard_iterate, MAX_PICARD_ITERATIONS};
use crate::tolerances::ROUNDOFF_FLOOR;
use crate::{Error, Result};

pub const MIN_LEVELS: usize = 3;
pub const MAX_LEVELS: usize = 8;

/// Pointwise absolute errors of one solver run against the exact solution.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport {
    pub method: Method,
    pub h: f64,
    /// `(x, |f_num − f_exact|)` on the trace grid.
    pub points: Vec<(f64, f64)>,
    pub max_error: f64,
    pub rms_error: f64,
}

impl ErrorReport {
    fn from_points(method: Method, h: f64, points: Vec<(f64, f64)>) -> Self {
        let max_error = points.iter().map(|p| p.1).fold(0.0, f64::max);
        let sum_sq: f64 = points.iter().map(|p| p.1 * p.1).sum();
        let rms_error = if points.is_empty() {
            0.0
        } else {
            libm::sqrt(sum_sq / points.len() as f64)
        };
        ErrorReport { method, h, points, max_error, rms_error }
    }
}

pub fn error_report<P: Problem>(p: &P, method: Method, h: f64) -> Result<ErrorReport> {
    let trace = solve(p, method, h)?;
    let points = trace.samples.iter().map(|&(x, f)| (x, (f - p.exact(x)).abs())).collect();
    Ok(ErrorReport::from_points(method, h, points))
}

/// One [`ErrorReport`] per method at step `h`, sorted by method.
pub fn error_table<P: Problem>(p: &P, methods: &[Method], h: f64) -> Result<Vec<ErrorReport>> {
    let mut reports = methods
        .iter()
        .map(|&m| error_report(p, m, h))
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by(|a, b| a.method.cmp(&b.method).then(b.h.total_cmp(&a.h)));
    Ok(reports)
}

/// Max errors on a ladder of step sizes and the fitted orders between
/// adjacent levels (`log₂(e_i / e_{i+1})` on a halving ladder).
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub method: Method,
    pub steps: Vec<f64>,
    pub max_errors: Vec<f64>,
    pub orders: Vec<f64>,
}

impl ConvergenceReport {
    fn from_levels(method: Method, steps: Vec<f64>, max_errors: Vec<f64>) -> Self {
        let orders = max_errors
            .windows(2)
            .zip(steps.windows(2))
            .map(|(e, h)| libm::log(e[0] / e[1]) / libm::log(h[0] / h[1]))
            .collect();
        ConvergenceReport { method, steps, max_errors, orders }
    }

    /// Largest deviation of any fitted order from `nominal`.
    pub fn max_order_deviation(&self, nominal: f64) -> f64 {
        self.orders.iter().map(|o| (o - nominal).abs()).fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ConvergenceError {
    Solver(Error),
    /// Errors reached the round-off floor before the ladder completed;
    /// carries the levels that were above it.
    Floor(ConvergenceReport),
}

impl fmt::Display for ConvergenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConvergenceError::Solver(e) => e.fmt(f),
            ConvergenceError::Floor(r) => write!(
                f,
                "errors reached the round-off floor after {} level(s) of the {} ladder",
                r.steps.len(),
                r.method
            ),
        }
    }
}

impl core::error::Error for ConvergenceError {}

impl From<Error> for ConvergenceError {
    fn from(e: Error) -> Self {
        ConvergenceError::Solver(e)
    }
}

/// Runs `method` at `h0, h0/2, …` for `levels` levels.
pub fn convergence_order<P: Problem>(
    p: &P,
    method: Method,
    h0: f64,
    levels: usize,
) -> core::result::Result<ConvergenceReport, ConvergenceError> {
    if !(MIN_LEVELS..=MAX_LEVELS).contains(&levels) {
        return Err(Error::Domain("convergence ladder needs between 3 and 8 levels").into());
    }
    let steps: Vec<f64> = (0..levels).map(|i| h0 / (1u32 << i) as f64).collect();
    convergence_on_ladder(p, method, &steps)
}

/// Like [`convergence_order`] on an arbitrary strictly decreasing ladder;
/// orders are `ln(e_i/e_{i+1}) / ln(h_i/h_{i+1})`.
pub fn convergence_on_ladder<P: Problem>(
    p: &P,
    method: Method,
    steps: &[f64],
) -> core::result::Result<ConvergenceReport, ConvergenceError> {
    if steps.len() < MIN_LEVELS {
        return Err(Error::Domain("convergence ladder needs at least 3 levels").into());
    }
    if steps.windows(2).any(|w| !(w[1] < w[0])) {
        return Err(Error::Domain("convergence ladder must be strictly decreasing").into());
    }
    if method == Method::Analytic {
        return Err(Error::Domain("the analytic method has no convergence order").into());
    }
    let mut kept = Vec::with_capacity(steps.len());
    let mut max_errors = Vec::with_capacity(steps.len());
    for &h in steps {
        let report = error_report(p, method, h)?;
        if report.max_error < ROUNDOFF_FLOOR {
            return Err(ConvergenceError::Floor(ConvergenceReport::from_levels(
                method, kept, max_errors,
            )));
        }
        kept.push(h);
        max_errors.push(report.max_error);
    }
    Ok(ConvergenceReport::from_levels(method, kept, max_errors))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesErrorPoint {
    pub order: usize,
    pub x: f64,
    pub abs_error: f64,
}

/// `|truncated decay series − exp_κ(−x)|` for each order on `x_grid`,
/// ordered by order then by x.
pub fn series_error_curve(k: Kappa, orders: &[usize], x_grid: &[f64]) -> Result<Vec<SeriesErrorPoint>> {
    if orders.is_empty() {
        return Err(Error::Domain("series_error_curve needs at least one order"));
    }
    let mut out = Vec::with_capacity(orders.len() * x_grid.len());
    for &order in orders {
        let s = decay_series_solution(k, order)?;
        for &x in x_grid {
            let abs_error = (s.evaluate(x) - kappa_exp(k, -x)).abs();
            out.push(SeriesErrorPoint { order, x, abs_error });
        }
    }
    Ok(out)
}

/// `exp_κ(−x)·(2|κ|x)^{1/|κ|}`, which tends to 1 as x → ∞.
pub fn asymptote_check(k: Kappa, x: f64) -> Result<f64> {
    if k.is_classical() {
        return Err(Error::Domain("asymptote_check requires kappa != 0"));
    }
    if !(x > 0.0) {
        return Err(Error::Domain("asymptote_check requires x > 0"));
    }
    let kappa = k.value().abs();
    Ok(kappa_exp(k, -x) * libm::pow(2.0 * kappa * x, 1.0 / kappa))
}

#[derive(Debug, Clone, PartialEq)]
pub struct PicardComparison {
    pub n: usize,
    /// `(x, picard, series, |picard − series|)`.
    pub pointwise: Vec<(f64, f64, f64, f64)>,
    /// `|Taylor(picard)_j − series_j|` for `j = 0..=n`.
    pub coefficient_differences: Vec<f64>,
}

impl PicardComparison {
    pub fn max_pointwise(&self) -> f64 {
        self.pointwise.iter().map(|p| p.3).fold(0.0, f64::max)
    }

    pub fn max_coefficient(&self) -> f64 {
        self.coefficient_differences.iter().copied().fold(0.0, f64::max)
    }
}

/// Compares Picard iterate `n` with the order-`n` power-series solution.
pub fn picard_vs_series(k: Kappa, n: usize, x_grid: &[f64]) -> Result<PicardComparison> {
    if n > MAX_PICARD_ITERATIONS {
        return Err(Error::Domain("picard iteration count must be at most 20"));
    }
    let picard = picard_iterate(k, n)?;
    let series = decay_series_solution(k, n)?;
    let pointwise = x_grid
        .iter()
        .map(|&x| {
            let a = evaluate_series(&picard, k, x);
            let b = evaluate_series(&series, k, x);
            (x, a, b, (a - b).abs())
        })
        .collect();
    let taylor = picard.taylor_in_x(n)?;
    let coefficient_differences =
        (0..=n).map(|j| (taylor.coefficient(j) - series.coefficient(j)).abs()).collect();
    Ok(PicardComparison { n, pointwise, coefficient_differences })
}
