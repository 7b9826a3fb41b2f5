use thiserror::Error;

use crate::poly2::Exponent;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty shape")]
    EmptyShape,
    #[error("duplicate offset {0} in shape")]
    DuplicateOffset(Exponent),
    #[error("dilation factor must be positive")]
    ZeroDilation,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("argument must be positive, got {0}")]
    NonPositive(i64),
    #[error("direction ({0}, {1}) is not primitive")]
    NonPrimitiveDirection(i64, i64),
    #[error("resultant undefined for constant g")]
    ConstantResultant,
    #[error("inexact division in exact elimination")]
    InexactDivision,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix inconsistent with |D| = {expected}: column {column} sums to {found}")]
    MatrixInconsistent { column: usize, expected: usize, found: u64 },
    #[error("alphabet of size {0} is not binary")]
    NonBinary(usize),
    #[error("convex criterion requires convex shape")]
    NonConvex,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("{0}")]
    Format(String),
}
