use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric: entry ({row},{col}) differs from ({col},{row})")]
    AsymmetricMatrix { row: usize, col: usize },

    #[error("ragged matrix: row {row} has {len} entries, expected {expected}")]
    RaggedMatrix { row: usize, len: usize, expected: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("linear system over Z/2 has no solution")]
    NoSolution,

    #[error("invalid spin structure {0}: Q·c is not congruent to diag(Q) mod 2")]
    InvalidSpinStructure(String),

    #[error("parity error in {what}: numerator {numerator} is odd, so the value is not an integer")]
    Parity { what: String, numerator: i128 },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("Wu invariants differ: {source_wu} vs {target_wu}; no connected summand relates them")]
    WuMismatch { source_wu: String, target_wu: String },

    #[error("Wu coset {0} has no base signature")]
    CosetUncovered(String),

    #[error("base signature {signature} in coset {coset} has the wrong parity (alpha = {alpha})")]
    ParityViolation { coset: String, signature: i64, alpha: usize },

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("missing data: {0}")]
    MissingData(String),

    #[error("invalid Gamma_2 coordinates {coords:?} for alpha = {alpha}")]
    InvalidCoords { coords: String, alpha: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Whether the error is caused by unreadable or malformed input,
    /// as opposed to well-formed data failing an identity.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::NotSquare { .. }
                | Error::AsymmetricMatrix { .. }
                | Error::RaggedMatrix { .. }
                | Error::DimensionMismatch { .. }
                | Error::InvalidCoords { .. }
                | Error::MissingData(_)
                | Error::Parse(_)
                | Error::Io(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
