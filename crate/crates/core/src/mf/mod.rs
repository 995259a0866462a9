//! Objects and functors of the category of matrix factorizations.
//!
//! Conventions: an object is `E1 --e1--> E0 --e0--> E1`; a morphism is a pair
//! `(p1, p0)` with `p1 e0 = f0 p0` and `f1 p1 = p0 e1`.

mod complex;
pub mod corpus;
mod factorization;
mod morphism;

pub use complex::PairComplex;
pub use factorization::{validate_parts, CellFailure, MatrixFactorization, ModulePresentation, ValidationReport};
pub use morphism::{Cone, MFMorphism};

use thiserror::Error;

use crate::poly::PolyError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MfError {
    #[error("not a matrix factorization: {0}")]
    NotAFactorization(ValidationReport),
    #[error("objects do not share ring, superpotential and critical value")]
    ContextMismatch,
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("variable '{0}' occurs in both factors")]
    VariableCollision(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("composition of maps {0} and {next} is nonzero", next = .0 + 1)]
    CompositionNonzero(usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
