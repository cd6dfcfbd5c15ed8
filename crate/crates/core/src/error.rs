use thiserror::Error;

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vector has zero norm")]
    ZeroVector,

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("spectrum is not sorted in descending order at position {position}")]
    UnsortedSpectrum { position: usize },

    #[error("invalid overlap profile: {0}")]
    InvalidOverlaps(String),

    #[error("dense operator is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("tridiagonal eigensolver did not converge after {iterations} sweeps")]
    NoConvergence { iterations: usize },

    #[error("target index {j} has no eigenvalue below it")]
    NoGapBelow { j: usize },

    #[error("eigenvalue {j} is degenerate with the one below it")]
    DegenerateGap { j: usize },

    #[error("eigenvalues below index {j} collapse onto the smallest one; the Chebyshev map is undefined")]
    DegenerateTail { j: usize },

    #[error("start vector has no component along eigenvector {index}")]
    ZeroOverlap { index: usize },

    #[error("Krylov dimension {n} is smaller than target index {j}")]
    DimensionBelowIndex { n: usize, j: usize },

    #[error("ritz prefix has {found} values but {needed} are required")]
    ShortRitzPrefix { needed: usize, found: usize },

    #[error("shift coincides with target")]
    ShiftCoincidesWithTarget,

    #[error("degenerate primed gap at shifted index {j}")]
    DegeneratePrimedGap { j: usize },

    #[error("shift does not satisfy the ordering needed for the mu ratio identity: {0}")]
    CorrespondenceBroken(&'static str),

    #[error("invalid band layout: {0}")]
    InvalidBands(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
