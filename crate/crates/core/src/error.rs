use thiserror::Error;

/// Errors raised by the engine. Validation variants name the invariant that
/// was violated.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension must be at least 1")]
    EmptyDimension,

    #[error("state is not normalized: |norm^2 - 1| = {deviation:e} exceeds NORM_TOL = {tol:e}")]
    NotNormalized { deviation: f64, tol: f64 },

    #[error(
        "operator is not unitary: max |U^dag U - I| = {deviation:e} exceeds UNITARY_TOL = {tol:e}"
    )]
    NotUnitary { deviation: f64, tol: f64 },

    #[error("eigenbasis is not orthonormal: |<e_{i}|e_{j}>|^2 deviates by {deviation:e}")]
    NotOrthonormal { i: usize, j: usize, deviation: f64 },

    #[error("observable has {basis} eigenvectors but {values} eigenvalues")]
    EigenvalueCount { basis: usize, values: usize },

    #[error("weights have length {found}, measurement has {expected} outcomes")]
    WeightLength { expected: usize, found: usize },

    #[error("weights are not strictly competitive: need a > b, got a = {a}, b = {b}")]
    NotStrictlyCompetitive { a: f64, b: f64 },

    #[error("index {index} out of range for {len} elements")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("outputs {first:?} and {second:?} tie for the closest state to gamma")]
    AmbiguousLocalMaximum {
        first: (usize, usize),
        second: (usize, usize),
    },

    #[error("preference grids differ in shape: {a:?} vs {b:?}")]
    ShapeMismatch {
        a: (usize, usize),
        b: (usize, usize),
    },

    #[error("a game needs at least one operation per player")]
    EmptyStrategySet,

    #[error("observables do not share an eigenbasis (eigenvector {index} unmatched)")]
    MismatchedEigenbasis { index: usize },

    #[error("enumeration needs {needed} ordering pairs, cap is {cap}")]
    CapExceeded { needed: String, cap: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("output {profile:?} matches none of the ranked states")]
    UnrankedOutput { profile: (usize, usize) },

    #[error("format error: {0}")]
    Format(String),
}

impl Error {
    /// True for malformed input that could not be decoded (as opposed to a
    /// decoded value that failed an invariant).
    pub fn is_format(&self) -> bool {
        matches!(self, Error::Format(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
