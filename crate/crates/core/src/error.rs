use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field parameters: {0}")]
    InvalidField(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("division by zero polynomial")]
    DivisionByZero,

    #[error("pole at place: {0}")]
    Pole(String),

    #[error("singular curve: discriminant is zero")]
    SingularCurve,

    #[error("isotrivial curve: j-invariant is constant (rejected; parity is known by other means)")]
    IsotrivialCurve,

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("conductor degree {deg_n} < 4; this cannot occur for a valid non-isotrivial curve over P^1 and indicates a bug upstream")]
    ConductorTooSmall { deg_n: i64 },

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
