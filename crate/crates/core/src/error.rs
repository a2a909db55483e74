use thiserror::Error;

/// Errors raised by the fractal calculus routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument fell outside the domain of the operation.
    #[error("{what} = {value} lies outside {domain}")]
    Range {
        what: &'static str,
        value: f64,
        domain: String,
    },

    /// A parameter violates the constraints of its type.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A profile produced a non-finite value, or a stencil touched a declared singular point.
    #[error("profile is singular near u = {at}")]
    Singular { at: f64 },

    /// An iterative procedure stopped before reaching its tolerance.
    #[error("{method} did not converge: estimate {estimate:e}, error {error:e}")]
    Convergence {
        method: &'static str,
        estimate: f64,
        error: f64,
    },

    /// The gamma function was evaluated at a pole.
    #[error("gamma function pole at z = {0}")]
    Pole(f64),

    /// Two series that must share a grid do not.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A Laplace integral does not converge for the requested transform variable.
    #[error("divergent transform: {0}")]
    Divergent(String),

    /// A time-stepping scheme hit a singular update.
    #[error("solver failure: {0}")]
    Solver(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn range(what: &'static str, value: f64, domain: impl Into<String>) -> Self {
        Error::Range {
            what,
            value,
            domain: domain.into(),
        }
    }
}
