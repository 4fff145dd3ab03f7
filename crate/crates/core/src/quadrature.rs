//! Adaptive Simpson quadrature and the κ-integral `∫ f(x) dx_{κ}`.

use alloc::vec::Vec;

use crate::deformed::{differential_weight, Kappa};
use crate::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_EVAL_BUDGET: usize = 1_000_000;

struct Segment {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    eps: f64,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) * (fa + 4.0 * fm + fb) / 6.0
}

/// Integrates `f` over `[a, b]` by adaptive Simpson with interval bisection.
///
/// Each segment is accepted once the two-half estimate differs from the
/// whole-segment estimate by at most `15·eps`, with `eps` halved on every
/// split, and is then Richardson-corrected. Fails with
/// [`Error::Convergence`] if more than `max_evals` integrand evaluations
/// would be needed.
pub fn adaptive_simpson<F>(f: F, a: f64, b: f64, tol: f64, max_evals: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain("integration bounds must be finite"));
    }
    if a > b {
        return Err(Error::Domain("integration requires a <= b"));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain("tolerance must be positive"));
    }
    if a == b {
        return Ok(0.0);
    }

    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let mut evals = 3usize;
    let mut stack = Vec::with_capacity(64);
    stack.push(Segment { a, b, fa, fm, fb, whole: simpson(a, b, fa, fm, fb), eps: tol });

    // Neumaier-compensated running sum.
    let mut sum = 0.0f64;
    let mut carry = 0.0f64;

    while let Some(seg) = stack.pop() {
        let m = 0.5 * (seg.a + seg.b);
        let lm = 0.5 * (seg.a + m);
        let rm = 0.5 * (m + seg.b);
        if evals + 2 > max_evals {
            return Err(Error::Convergence { evaluations: evals, estimate: sum + carry });
        }
        let (flm, frm) = (f(lm), f(rm));
        evals += 2;
        let left = simpson(seg.a, m, seg.fa, flm, seg.fm);
        let right = simpson(m, seg.b, seg.fm, frm, seg.fb);
        let delta = left + right - seg.whole;
        // the second test stops bisection once midpoints stop being distinct
        if delta.abs() <= 15.0 * seg.eps || lm <= seg.a || rm >= seg.b {
            let piece = left + right + delta / 15.0;
            let t = sum + piece;
            if sum.abs() >= piece.abs() {
                carry += (sum - t) + piece;
            } else {
                carry += (piece - t) + sum;
            }
            sum = t;
        } else {
            let eps = 0.5 * seg.eps;
            stack.push(Segment { a: m, b: seg.b, fa: seg.fm, fm: frm, fb: seg.fb, whole: right, eps });
            stack.push(Segment { a: seg.a, b: m, fa: seg.fa, fm: flm, fb: seg.fm, whole: left, eps });
        }
    }
    Ok(sum + carry)
}

/// κ-integral `∫ₐᵇ f(x)/√(1+κ²x²) dx` with absolute tolerance `tol`.
pub fn kappa_integral<F>(k: Kappa, f: F, a: f64, b: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    adaptive_simpson(|x| f(x) * differential_weight(k, x), a, b, tol, DEFAULT_EVAL_BUDGET)
}
