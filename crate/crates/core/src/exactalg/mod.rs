//! Exact scalars: arbitrary-precision rationals and Laurent polynomials in
//! one variable over them. Nothing in this crate touches floating point
//! except for display heuristics.

mod laurent;
mod rational;

pub use laurent::{laurent_add, laurent_mul, LaurentPoly};
pub use rational::{rat, Rational};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}
