//! Hori–Vafa mirror superpotentials of toric fans and exact critical-point data.
//!
//! A fan with rays `v_ρ` and relations `Σ a_ρ T_ρ = t_j` gives the Laurent
//! polynomial `W = Σ_ρ e^{-T_ρ}` on the torus with coordinates `Y_i = e^{-T_i}`
//! for the chosen basis rays, and `q_j = e^{-t_j}` as formal positive rationals.

mod critical;
mod toric;
mod univariate;

pub use critical::{critical_count, critical_ideal, critical_values, fiber_cardinality, CriticalReport};
pub use toric::{build_superpotential, MirrorTerm, Relation, SuperpotentialSpec, ToricSpec};

use thiserror::Error;

use crate::poly::PolyError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MirrorError {
    #[error("invalid toric data: {0}")]
    InvalidSpec(String),
    #[error("basis rays are not a lattice basis (determinant {0})")]
    NonUnimodularBasis(String),
    #[error("ray {0} cannot be resolved against the basis rays")]
    UnresolvableRay(usize),
    #[error("relation {0} does not hold among the ray vectors")]
    InconsistentRelation(usize),
    #[error("missing value for parameter '{0}'")]
    MissingParameter(String),
    #[error("unknown parameter '{0}'")]
    UnknownParameter(String),
    #[error("parameter '{0}' must be a positive rational")]
    NonPositiveParameter(String),
    #[error("the critical locus is not finite")]
    InfiniteCriticalLocus,
    #[error("elimination produced the zero ideal")]
    ZeroElimination,
    #[error("{0} is a critical value")]
    CriticalValue(String),
    #[error("fiber counts need a one-variable superpotential, found {0} variables")]
    NotOneDimensional(usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
