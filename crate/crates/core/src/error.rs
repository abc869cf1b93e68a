use num_bigint::BigInt;
use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree {0} is outside the supported range 1..={max}", max = crate::perm::MAX_DEGREE)]
    UnsupportedDegree(usize),

    #[error("symbol {symbol} is not in [1, {n}]")]
    SymbolOutOfRange { symbol: usize, n: usize },

    #[error("a transposition needs two distinct symbols, got ({0} {0})")]
    DegenerateTransposition(usize),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("parse error at position {position} in {input:?}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },

    /// A factorisation fails one of its defining conditions; `condition` is
    /// the short label (S1, S2', H0, H1, H2, ...).
    #[error("condition {condition} violated: {detail}")]
    Condition {
        condition: &'static str,
        detail: String,
    },

    #[error("{left} and {right} are not conjugate")]
    NotConjugate {
        left: Permutation,
        right: Permutation,
    },

    /// `omega` and `gamma` are conjugate but carry different coefficients.
    #[error("not central: [{omega}] = {omega_coefficient} but [{gamma}] = {gamma_coefficient}")]
    NotCentral {
        omega: Permutation,
        gamma: Permutation,
        omega_coefficient: BigInt,
        gamma_coefficient: BigInt,
    },

    #[error("length {length} is inconsistent with genus {genus} for this target")]
    InconsistentLength { length: usize, genus: u32 },

    #[error("bound exceeded: {what} = {requested} but the limit is {limit}")]
    BoundExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("division in {0} is not exact")]
    InexactDivision(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_error(input: &str, position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        input: input.to_string(),
        position,
        message: message.into(),
    }
}
