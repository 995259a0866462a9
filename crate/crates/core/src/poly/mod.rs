//! Exact multivariate polynomial arithmetic over ℚ and prime fields, with
//! Gröbner bases for ideals and free-module submodules.

mod field;
mod groebner;
mod laurent;
pub mod linalg;
mod matrix;
mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use field::{Coeff, Field};
pub use groebner::{
    buchberger, module_groebner, normal_form, quotient_dim, quotient_module_dim, submodule_membership,
    syzygy_basis, Dim, GroebnerBasis, Lifter,
};
pub(crate) use groebner::{for_each_quotient_monomial, kernel_representative};
pub use laurent::LaurentPolynomial;
pub(crate) use laurent::write_laurent_term;
pub use matrix::PolyMatrix;
pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::Polynomial;
pub use ring::{Ring, RingContext};
pub(crate) use ring::{is_identifier, same_ring};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("invalid coefficient field: {0}")]
    InvalidField(String),
    #[error("invalid variable name '{0}'")]
    InvalidVariable(String),
    #[error("duplicate variable '{0}'")]
    DuplicateVariable(String),
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("vector length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("image module is not contained in the kernel module")]
    ImageNotInKernel,
}
