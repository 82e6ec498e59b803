use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("cannot evaluate a Laurent polynomial at 0")]
    EvaluateAtZero,

    #[error("the zero polynomial has no unit normalization")]
    ZeroPolynomial,

    #[error("matrix is not square")]
    NotSquare,

    #[error("Seifert matrix has odd size {0}")]
    OddSize(usize),

    #[error("det(M - M^T) = {0}, expected 1")]
    SkewNotUnimodular(i128),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("matrix is not unimodular (det = {0})")]
    NotUnimodular(i128),

    #[error("operation requires a genus-one form, got genus {0}")]
    GenusNotOne(usize),

    #[error("integer overflow in matrix arithmetic")]
    Overflow,

    #[error("brute-force search rejected: {0}")]
    SearchTooLarge(String),

    #[error("arc {arc} appears {count} times (expected 2)")]
    ArcMultiplicity { arc: u32, count: usize },

    #[error("inconsistent orientation at crossing {0}")]
    InconsistentOrientation(usize),

    #[error("multiple components ({0}); only knots are supported")]
    MultipleComponents(usize),

    #[error("diagram has {count} crossings, above the cap of {cap}")]
    CrossingCap { count: usize, cap: usize },

    #[error("unknown arc {0}")]
    UnknownArc(u32),

    #[error("orientation mismatch at splice")]
    OrientationMismatch,

    #[error("malformed Morse diagram: {0}")]
    Morse(String),

    #[error("invalid lambda spec: {0}")]
    InvalidLambda(String),
}
