use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("pole at evaluation point q = {0}")]
    PoleAtEvaluationPoint(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("series has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("series constant term is not 1")]
    ConstantTermNotOne,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("cannot contract loop arrow {0}")]
    ContractLoop(usize),
    #[error("quiver is not connected")]
    NotConnected,
    #[error("quiver is not 2-connected")]
    Not2Connected,
    #[error("invalid semisimple type: {0}")]
    InvalidType(String),
    #[error("reflection at vertex {0}, which carries a loop")]
    ReflectionAtImaginaryVertex(usize),
    #[error("enumeration cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded {
        what: String,
        needed: String,
        cap: String,
    },
    #[error("endomorphism ring too large for the locality test ({0} elements)")]
    EndTooLargeForLocalityTest(String),
    #[error("lambda is not generic: lambda . r = {0}")]
    NonGenericLambda(i64),
    #[error("characteristic {p} too small: need p > {bound}")]
    CharacteristicTooSmall { p: u32, bound: i64 },
    #[error("unsupported field size {0}")]
    UnsupportedField(u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn cap_error(what: &str, needed: impl ToString, cap: impl ToString) -> Error {
    Error::CapExceeded {
        what: what.to_string(),
        needed: needed.to_string(),
        cap: cap.to_string(),
    }
}
