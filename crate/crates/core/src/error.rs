use thiserror::Error;

/// Errors surfaced by the algebra and homology machinery.
///
/// "Expected" infinite outcomes (projective dimension above a bound, say)
/// are values, not errors; see [`crate::homology::Dim`].
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("algebra mismatch: operands live over different algebras")]
    AlgebraMismatch,

    #[error("relations do not generate an admissible ideal: {0}")]
    NotAdmissible(String),

    #[error("no length <= {cap} kills all paths; quotient not visibly finite dimensional")]
    NotNilpotent { cap: usize },

    #[error("construction invariant violated: {0}")]
    Invariant(String),

    #[error("search budget exceeded ({0})")]
    BudgetExceeded(String),

    #[error("unsupported scalar extension: {0}")]
    UnsupportedExtension(String),

    #[error("injective dimension not resolved within bound {bound}")]
    NotWithinBound { bound: usize },

    #[error("Gorenstein dimension unknown; run is_gorenstein first (bound too small?)")]
    GorensteinUnknown,

    #[error("module is not Gorenstein projective")]
    NotGorensteinProjective,

    #[error("module is not projective")]
    NotProjective,

    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("io error: {0}")]
    Io(String),

    /// Indicates a bug in this crate (e.g. a Zaks violation), never a
    /// mathematical outcome.
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
