use crate::{Poly, Rational};
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid data: {0}")]
    InvalidData(String),

    #[error("negative power of a non-monomial polynomial")]
    UnsupportedPower,

    #[error("inexact division, remainder {remainder}")]
    NonDivisible { remainder: Poly },

    #[error("pole at t = {0}")]
    PoleAtPoint(Rational),

    #[error("truncation {requested} exceeds the configured maximum {max}")]
    TruncationTooLarge { requested: i64, max: i64 },

    #[error("zeta atom Z(q^-1) has a pole under the substitution")]
    ZetaAtomPole,

    #[error("expansion is not a polynomial of degree <= {bound}: {detail}")]
    NotPolynomial { bound: i64, detail: String },

    #[error("result is not a Poincaré polynomial: {0}")]
    NonPolynomialResult(String),

    #[error("semistable and stable loci differ: sub-data {witness} of degree {degree} has equal slope")]
    StrictSemistable { witness: String, degree: i64 },

    #[error("{method} disagrees with the closed formula at t^{exponent}: {got} vs {expected}")]
    MismatchAgainstClosed { method: &'static str, exponent: i64, got: Box<Rational>, expected: Box<Rational> },

    #[error("truncation {truncation} too small: coefficient of t^{exponent} above 2*dim is {value}")]
    TruncationTooSmall { truncation: i64, exponent: i64, value: Rational },

    #[error("method not applicable: {0}")]
    MethodInapplicable(String),

    #[error("psi is an integer ({0}) for some rank-2 partition")]
    IntegralPsi(Rational),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
