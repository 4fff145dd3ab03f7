//! κ-deformed decay and logistic equations: problem definitions, analytic
//! solution routes, residual checks, slope fields and fixed-step integrators.

mod analytic;
mod integrators;
mod problem;
mod slope;

pub use analytic::{
    closed_form_decay, closed_form_decay_derivative, logistic_closed_form,
    logistic_closed_form_derivative, logistic_residual, quadrature_decay, residual_decay,
    substitution_decay,
};
pub use integrators::{ab2_solve, analytic_trace, euler_solve, rk4_solve, solve, step_count};
pub use problem::{DecayProblem, LogisticProblem, Method, Problem, SolutionTrace};
pub use slope::{slope_field, uniform_grid, SlopeNode};
