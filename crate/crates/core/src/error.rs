use thiserror::Error;

/// Domain errors raised by the arithmetic and algebraic operations.
///
/// Values are rendered with their string form so the error type stays
/// independent of the coefficient type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative input: {0}")]
    NegativeInput(String),
    #[error("input must be strictly positive: {0}")]
    NotPositive(String),
    #[error("{0} has no rational square root")]
    NotASquare(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomials are not coprime")]
    NotCoprime,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("coefficient {0} has an infinite part")]
    NotSplittable(String),
    #[error("real part {actual} does not equal the product {expected}")]
    RealPartMismatch { expected: String, actual: String },
    #[error("degree mismatch: {0}")]
    Degree(String),
    #[error("real part has a simple real root in ({lo}, {hi}) but it is not rational")]
    RealRootNotRational { lo: String, hi: String },
    #[error("real part has no simple real root and no coprime rational splitting")]
    RealRootNotSimple,
    #[error("{0} is not an ordinal")]
    NotAnOrdinal(String),
    #[error("doublure generator {0} is not strictly negative")]
    NonNegativeGenerator(String),
    #[error("{0} has not been emitted by the doublure stream")]
    NotEmitted(String),
    #[error("polynomial reduces to a pure monomial; its root is 0")]
    PureMonomial,
}

pub type Result<T> = std::result::Result<T, Error>;
