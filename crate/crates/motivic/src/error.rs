//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero class")]
    DivisionByZero,

    #[error("pole: denominator vanishes at q = {q}")]
    Pole { q: i64 },

    #[error("cannot evaluate negative powers of L at q = 0")]
    NegativePowerAtZero,

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("series constant term must be 1, found {found}")]
    ConstantTermNotOne { found: String },

    #[error("cannot invert a series with zero constant term")]
    ZeroConstantTerm,

    #[error("coefficient index {index} exceeds series order {order}")]
    OrderExceeded { index: usize, order: usize },

    #[error("substitution step must be at least 1")]
    ZeroStep,

    #[error(
        "unsupported exponent at factor (1 - T^{factor}): {exponent} \
         is not a Laurent polynomial in L with integer coefficients"
    )]
    UnsupportedExponent { factor: u32, exponent: String },

    #[error("Gaussian binomial requires m <= n, got n = {n}, m = {m}")]
    BinomialRange { n: u32, m: u32 },

    #[error(
        "class is not effective (not a polynomial in L with nonnegative coefficients): {class}"
    )]
    NotEffective { class: String },

    #[error("inconsistent point-count table: {reason}")]
    InconsistentTable { reason: String },

    #[error("{0} is not a prime power >= 2")]
    NotPrimePower(u32),

    #[error("out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
