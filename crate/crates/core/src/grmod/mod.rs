//! Free bigraded modules over `Λ = Q[x^±1]`, `Λ`-linear maps between them,
//! and their restrictions to finite-dimensional homogeneous slices.

pub mod dense;
pub mod linalg;
mod map;
mod module;
mod slice;

pub use linalg::{kernel, rank, solve, QMatrix, RowEchelon, SparseVec};
pub use map::{compose, Inhomogeneity, LambdaMap, LevelIncrease};
pub use module::{BigradedModule, Generator};
pub use slice::{restrict_between, restrict_to_slice, slice_basis, QVector, SliceBasis, SliceElem};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrModError {
    #[error("duplicate generator id {0:?}")]
    DuplicateId(String),
    #[error("unknown generator id {0:?}")]
    UnknownGenerator(String),
    #[error("inhomogeneous term x^{pow} in entry {from} -> {to}")]
    Inhomogeneous { from: String, to: String, pow: i64 },
    #[error("{0}")]
    ModuleMismatch(&'static str),
}
