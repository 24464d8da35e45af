//! Error type shared by every module in the crate.

/// Crate-wide error enumeration.
///
/// Variants are grouped by how a front end should react: invalid input
/// (reject before computing), convergence failures (the requested value could
/// not be produced to tolerance), and missing capabilities (the input is
/// well-formed but outside the implemented catalog).
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A parameter failed a validity predicate (range, finiteness, ordering).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A special function was evaluated at one of its poles.
    #[error("pole encountered: {0}")]
    Pole(String),

    /// A series failed the stopping rule within its term budget.
    #[error("series failed to converge within {terms} terms (last |term|/|sum| = {last_ratio:.3e})")]
    NonConvergence { terms: usize, last_ratio: f64 },

    /// An infinite-upper-limit finite part was requested for a function
    /// family without a registered closed form.
    #[error("no closed form registered for '{function}' with an infinite upper limit ({context})")]
    MissingClosedForm { function: String, context: String },

    /// Adaptive quadrature could not reach the requested tolerance.
    #[error("quadrature failed: {0}")]
    QuadratureFailure(String),

    /// The epsilon-extrapolation rungs did not contract towards a limit.
    #[error("extrapolation rungs do not contract: {0}")]
    ExtrapolationDivergence(String),

    /// A representation that is analytically exact but numerically
    /// cancellation-dominated was evaluated outside its usable range.
    #[error("representation loses accuracy: {0}")]
    AccuracyLoss(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable code for CLI reporting.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidParameter(_) => "E_VALIDATION",
            Error::Pole(_) => "E_POLE",
            Error::NonConvergence { .. } => "E_NONCONV",
            Error::MissingClosedForm { .. } => "E_NOCLOSEDFORM",
            Error::QuadratureFailure(_) => "E_QUAD",
            Error::ExtrapolationDivergence(_) => "E_EXTRAP",
            Error::AccuracyLoss(_) => "E_ACCURACY",
        }
    }

    /// Process exit status a CLI should use for this error:
    /// 2 for input validation problems, 3 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParameter(_) | Error::Pole(_) | Error::MissingClosedForm { .. } => 2,
            Error::NonConvergence { .. }
            | Error::QuadratureFailure(_)
            | Error::ExtrapolationDivergence(_)
            | Error::AccuracyLoss(_) => 3,
        }
    }
}
