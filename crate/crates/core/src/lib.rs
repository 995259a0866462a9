//! Exact computations in the category of matrix factorizations of a polynomial
//! superpotential, together with toric mirror superpotentials and their
//! critical-point data.

pub mod poly;
pub mod mf;
pub mod hom;
pub mod mirror;
pub mod cli;
