use thiserror::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// How an error should be classified by callers that map failures to
/// process exit codes: contract violations (bad inputs, domain errors)
/// versus numerical-tolerance failures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Contract,
    Tolerance,
    Io,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("integer arithmetic overflow during {0}")]
    ArithmeticOverflow(&'static str),

    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("atom bases are not an orthonormal resolution of the identity: {0}")]
    NonOrthonormalBasis(String),

    #[error("function is not K-periodic: max violation {max_violation:.3e} at {at}")]
    NotKPeriodic { max_violation: f64, at: String },

    #[error("frequency {0} does not lie in the annihilator of K")]
    FrequencyNotInAnnihilator(String),

    #[error("model is not square integrable over G/K: {0}")]
    NotSquareIntegrable(String),

    #[error("square integrability undecidable: {0}")]
    Undecidable(String),

    #[error("periodic field value missing at quotient coordinate {0} (support undeclared)")]
    MissingPeriodicValue(String),

    #[error("kernel is not positive semidefinite: min eigenvalue {min_eig:.3e} (scale {scale:.3e})")]
    NonPsdKernel { min_eig: f64, scale: f64 },

    #[error("kernel is not K-periodically correlated: max violation {max_violation:.3e}")]
    NotKpcKernel { max_violation: f64 },

    #[error("insufficient window overlap under generator {generator}: {found} points, need {needed}")]
    InsufficientOverlap {
        generator: String,
        found: usize,
        needed: usize,
    },

    #[error("eigenphase clustering ambiguity: {0}")]
    Degeneracy(String),

    #[error("sample window does not cover the requested lag: {0}")]
    Coverage(String),

    #[error("harmonizability undetermined: {0}")]
    HarmonizabilityUndetermined(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("numerical tolerance exceeded in {context}: {value:.3e} > {bound:.3e}")]
    ToleranceExceeded {
        context: String,
        value: f64,
        bound: f64,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::NonPsdKernel { .. }
            | Error::NotKpcKernel { .. }
            | Error::Degeneracy(_)
            | Error::ToleranceExceeded { .. } => ErrorKind::Tolerance,
            Error::Io(_) => ErrorKind::Io,
            _ => ErrorKind::Contract,
        }
    }
}
