//! I-graded SO-complexes: the data `(C, d, U, D1, D2)`, the axiom checker,
//! the assembled tilde complex, the restricted Künneth product, and the
//! complexes of `Σ(2,3,5)` and its connected sums.

mod build;
mod complex;
pub mod json;
pub mod sample;
mod tensor;
mod tilde;
mod validate;

pub use build::{build_y1, build_yn, fk, rank_yn, Y1Gen, ALPHA, BETA, THETA, UNDERLINE};
pub use complex::{Element, SOComplex};
pub use tensor::tensor;
pub use tilde::{assemble_tilde, tilde_tensor, TildeComplex};
pub use validate::{validate, ValidationReport, Violation};

use thiserror::Error;

use crate::grmod::GrModError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SocxError {
    #[error(transparent)]
    Module(#[from] GrModError),
    #[error("map {map} has the wrong shape: {detail}")]
    Shape { map: &'static str, detail: String },
    #[error("complex {name:?} fails validation ({count} violations, first: {first})")]
    Invalid { name: String, count: usize, first: String },
    #[error("unsupported tensor product: {0}")]
    UnsupportedTensor(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("malformed socx document: {0}")]
    Format(String),
}
