use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument violated an operation's precondition.
    Domain(&'static str),
    /// Adaptive quadrature ran out of its evaluation budget.
    Convergence { evaluations: usize, estimate: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Convergence { evaluations, estimate } => write!(
                f,
                "quadrature did not converge after {evaluations} evaluations (estimate {estimate})"
            ),
        }
    }
}

impl core::error::Error for Error {}
