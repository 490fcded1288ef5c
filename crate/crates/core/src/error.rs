use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("singular curve: 4A^3 + 27B^2 = 0")]
    InvalidCurve,
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("the point at infinity has no compressed form")]
    CannotCompressIdentity,
    #[error("point is not in the trace zero subgroup")]
    NotTraceZero,
    #[error("degenerate compressed input: every value of the missing coordinate solves the equation")]
    DegenerateInput,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
