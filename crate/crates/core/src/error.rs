use thiserror::Error;

/// Errors raised by the algebra, braid and representation layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not divisible in the Laurent ring")]
    NotDivisible,
    #[error("negative power of a non-unit polynomial")]
    NegativePower,
    #[error("substituted value is zero")]
    ZeroSubstitution,
    #[error("denominator vanishes under substitution: {0}")]
    DenominatorVanishes(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    Shape {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("not invertible over the Laurent ring (determinant {0})")]
    NotInvertible(String),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("factorial division is not exact")]
    InexactFactorial,
    #[error("malformed braid token {token:?} at {pos}")]
    WordParse { pos: usize, token: String },
    #[error("generator index {index} at {pos} out of range for {strands} strands")]
    IndexRange {
        pos: usize,
        index: i64,
        strands: usize,
    },
    #[error("strand mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("invalid parameter: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
