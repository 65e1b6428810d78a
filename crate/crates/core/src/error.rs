use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid coefficient field: {0}")]
    InvalidField(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("unknown variable `{name}` at offset {offset}")]
    UnknownVariable { name: String, offset: usize },
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("operands live in different rings")]
    MixedRings,
    #[error("monomials have {0} and {1} variables")]
    MismatchedMonomials(usize, usize),
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("map is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("module is not monomial: {0}")]
    NotMonomial(String),
    #[error("the unit ideal is not allowed here")]
    ImproperIdeal,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
