use thiserror::Error;

/// Errors raised by the series, radius, extremal and verification layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LandauError {
    /// An argument fell outside the set where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// Division by a series whose constant term is (numerically) zero.
    #[error("singular denominator: |constant term| = {0:e}")]
    Singular(f64),

    /// Theorem parameters violate an invariant.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// The operation is not defined for this function kind.
    #[error("unsupported function kind: {0}")]
    UnsupportedKind(String),

    /// Root search was started without a positive left endpoint.
    #[error("bracket error: f(lo) = {0} is not positive")]
    Bracket(f64),

    /// A documented precondition does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Random generation gave up after too many rejected draws.
    #[error("resampling exhausted after {0} attempts")]
    ResampleExhausted(usize),
}

pub type Result<T> = std::result::Result<T, LandauError>;
