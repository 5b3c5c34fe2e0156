use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator lists differ: {0:?} vs {1:?}")]
    GeneratorMismatch(Vec<String>, Vec<String>),
    #[error("parity violation: {0}")]
    Parity(String),
    #[error("singular body: {0}")]
    SingularBody(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("point is not on the curve: {0}")]
    NotOnCurve(String),
    #[error("zero function has no valuation")]
    ZeroFunction,
    #[error("support is not representable: {0}")]
    UnsupportedSupport(String),
    #[error("f(x0) = 0 at x0 = {0}; use y as uniformizer")]
    WeierstrassExpansion(String),
    #[error("wrong degree: expected {expected}, got {got}")]
    WrongDegree { expected: i64, got: i64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("hypotheses not met: {0}")]
    Hypotheses(String),
    #[error("very ampleness fails: {0}")]
    NotVeryAmple(String),
    #[error("irregular cochain: {0}")]
    IrregularCochain(String),
    #[error("truncation bound exceeded: {0}")]
    TruncationExceeded(String),
    #[error("undecided: {0}")]
    Undecided(String),
    #[error("not superconformal: {0}")]
    NotSuperconformal(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precision exhausted: {0}")]
    Precision(String),
}

pub type Result<T> = std::result::Result<T, Error>;
