//! Checked-in thresholds for the verification suite.
//!
//! None of these come from published tables; each is derived from the
//! method's order and the closed-form solution, so a regression in any
//! solver moves a number across one of these lines.

/// Relative error of `exp_κ ∘ ln_κ` and `ln_κ ∘ exp_κ`.
pub const INVERSE_ROUNDTRIP_REL: f64 = 1e-12;
/// `to_kappa_number` followed by `from_kappa_number`.
pub const COORDINATE_ROUNDTRIP_REL: f64 = 1e-12;
/// `exp_κ(x) = exp_{−κ}(x)`.
pub const KAPPA_EVENNESS_REL: f64 = 1e-15;
/// Group laws: commutativity and associativity.
pub const GROUP_LAW_REL: f64 = 1e-10;
/// Group laws: identity and inverse.
pub const GROUP_IDENTITY_REL: f64 = 1e-12;
/// `exp_κ(x ⊕ y) = exp_κ(x)·exp_κ(y)`.
pub const HOMOMORPHISM_REL: f64 = 1e-11;
/// `exp_κ` against `exp` at κ = 1e-6, |x| ≤ 5.
pub const CLASSICAL_LIMIT_REL: f64 = 1e-9;
/// `exp_κ(−x)(2κx)^{1/κ}` against 1 at x = 1e6.
pub const POWER_LAW_TAIL: f64 = 1e-4;

/// Taylor coefficients against the printed closed forms.
pub const TAYLOR_COEFFICIENT_ABS: f64 = 1e-13;
/// Power-series recurrence against the composition oracle.
pub const SERIES_ORACLE_ABS: f64 = 1e-12;
/// Picard iterate Taylor coefficients against the power-series solution.
pub const PICARD_TAYLOR_ABS: f64 = 1e-12;
/// `√(1+κ²x²)²` through truncation order.
pub const SQRT_SQUARE_ABS: f64 = 1e-13;

/// Pairwise agreement of the three analytic solution routes.
pub const ANALYTIC_AGREEMENT_REL: f64 = 1e-10;
/// Quadrature tolerance used for the analytic sweep.
pub const QUADRATURE_TOL: f64 = 1e-12;
/// Direct-substitution residual of the closed form.
pub const DECAY_RESIDUAL_ABS: f64 = 1e-11;
/// Residual of the logistic closed form.
pub const LOGISTIC_RESIDUAL_ABS: f64 = 1e-10;

/// Max error over [0, 5] at h = 0.01, κ = 0.9.
pub const EULER_MAX_ERROR: f64 = 5e-3;
pub const AB2_MAX_ERROR: f64 = 5e-5;
pub const RK4_MAX_ERROR: f64 = 1e-9;
/// RK4 on the logistic problem over [−5, 5] at h = 0.01.
pub const LOGISTIC_RK4_MAX_ERROR: f64 = 1e-8;

/// Allowed deviation of fitted orders from 1 and 2.
pub const LOW_ORDER_BAND: f64 = 0.2;
/// Allowed deviation of the fitted RK4 order from 4.
pub const RK4_ORDER_BAND: f64 = 0.25;
/// Errors below this are rounding noise; ladders stop before reaching it.
pub const ROUNDOFF_FLOOR: f64 = 1e-13;
/// Required ratio between successive methods' max errors at h = 0.01.
pub const ERROR_SEPARATION: f64 = 10.0;
