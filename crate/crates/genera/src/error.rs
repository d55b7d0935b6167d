//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong while building genera or evaluating them.
///
/// Series-level variants (`CoeffBeyondOrder` and the constant-term
/// preconditions) indicate an internal working-order bug when they surface
/// from an evaluation; the remaining variants are invalid user input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient {index} requested from a series truncated at order {order}")]
    CoeffBeyondOrder { index: usize, order: usize },

    #[error("series reciprocal needs a nonzero constant term")]
    RecipZeroConstant,

    #[error("series exponential needs a zero constant term")]
    ExpNonzeroConstant,

    #[error("series logarithm needs constant term 1")]
    LogConstantNotOne,

    #[error("invalid rational literal {text:?} (expected -?digits(/digits)?)")]
    InvalidRational { text: String },

    #[error("zero denominator in rational literal {text:?}")]
    ZeroDenominator { text: String },

    #[error("degrees must be >= 1")]
    ZeroDegree,

    #[error("custom genus {name:?} supplies {supplied} coefficients but order {requested} was requested")]
    CustomOrderTooShort {
        name: String,
        supplied: usize,
        requested: usize,
    },

    #[error("custom genus file has no `name:` line before the coefficients")]
    MissingGenusName,

    #[error("custom genus file, line {line}: {message}")]
    GenusFile { line: usize, message: String },

    #[error("{space} is not spin (c1 = {c1} is odd), alpha invariant undefined")]
    NotSpin { space: String, c1: i64 },

    #[error("{space} has odd complex dimension {n}, operation needs an even one")]
    OddDimension { space: String, n: usize },

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
}
