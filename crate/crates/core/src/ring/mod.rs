//! Sparse multivariate polynomials over the rationals.

mod coefficient;
mod context;
mod monomial;
mod polynomial;

pub use coefficient::{cube_root, format_coefficient, integer, is_one, rational, Coefficient};
pub use context::{is_identifier, Ring, RingBuilder, RingContext, DEFAULT_EXPONENT_LIMIT};
pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::{ring_arith, ArithOp, Binding, Degree, Polynomial, Valuation};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("operands belong to incompatible rings")]
    ContextMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("`{0}` is not a valid variable name")]
    InvalidName(String),
    #[error("exponent limit must be positive")]
    InvalidExponentLimit,
    #[error("monomial has {found} exponents, ring has {expected} variables")]
    MonomialLength { expected: usize, found: usize },
    #[error("exponent of `{variable}` exceeds the guard of {limit}")]
    ExponentOverflow { variable: String, limit: u16 },
}
