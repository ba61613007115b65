use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different rings")]
    MixedRings,
    #[error("ideals belong to different rings")]
    OwnerMismatch,
    #[error("resource limit exceeded: {0}")]
    ResourceExceeded(String),
    #[error("at most {max} variables are supported, got {got}")]
    TooManyVariables { max: usize, got: usize },
    #[error("element is not a member of the ideal")]
    NotAMember,
    #[error("element is not divisible by the given divisor")]
    NotDivisible,
    #[error("non-positive weight: {0}")]
    NonPositiveWeight(String),
    #[error("the given elements are not a system of parameters (dim A/q = {dim})")]
    NotParameters { dim: i64 },
    #[error("module does not have finite length")]
    NotFiniteLength,
    #[error("quotient ring is not Artinian")]
    NotArtinian,
    #[error("Hilbert-Samuel differences did not stabilize up to n = {0}")]
    NoStabilization(usize),
    #[error("ideal is not contained in the candidate")]
    NotContained,
    #[error("no filter-regular pair found after {0} trials")]
    PairNotFound(usize),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("hypothesis not verified: {0}")]
    HypothesisNotVerified(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("the S2-ification is not connected: degree-0 part has dimension {0}")]
    NonConnected(usize),
    #[error("expected a ring of dimension {expected}, got {got}")]
    WrongDimension { expected: i64, got: i64 },
    #[error("depth of the ring is {0}, expected 1")]
    DepthNotOne(i64),
    #[error("equivalence violated: {0}")]
    EquivalenceViolation(String),
    #[error("data error: {0}")]
    DataError(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

/// Lazily cached Gröbner bases sit behind infallible accessors. When such a
/// computation fails (typically on the S-pair cap) it unwinds with the
/// [`Error`] itself as payload; `contain` turns that unwind back into `Err`.
pub fn contain<T>(f: impl FnOnce() -> Result<T>) -> Result<T> {
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(f)) {
        Ok(r) => r,
        Err(payload) => match payload.downcast::<Error>() {
            Ok(e) => Err(*e),
            Err(other) => std::panic::resume_unwind(other),
        },
    }
}

pub(crate) fn raise(e: Error) -> ! {
    std::panic::panic_any(e)
}
