//! Built-in example objects: the indecomposables of the A_n singularities and
//! the two rank-one factorizations of the ordinary double point `uv`.

use crate::poly::{MonomialOrder, Ring, RingContext};

use super::MatrixFactorization;

pub fn x_ring() -> Ring {
    RingContext::rational(&["x"])
}

pub fn uv_ring() -> Ring {
    RingContext::new(&["u", "v"], crate::poly::Field::Rational, MonomialOrder::GrevLex).expect("valid names")
}

/// `(x^a, x^{n+1-a})` over `W = x^{n+1}`, for `1 <= a <= n`.
pub fn a_n(n: u32, a: u32) -> MatrixFactorization {
    try_a_n(n, a).expect("1 <= a <= n")
}

pub fn try_a_n(n: u32, a: u32) -> Option<MatrixFactorization> {
    if n == 0 || a == 0 || a > n {
        return None;
    }
    let r = x_ring();
    let w = format!("x^{}", n + 1);
    let e1 = format!("x^{a}");
    let e0 = format!("x^{}", n + 1 - a);
    MatrixFactorization::rank_one(&r, &w, &e1, &e0).ok()
}

/// All `(x^a, x^{n+1-a})` with `1 <= a <= n`.
pub fn a_n_family(n: u32) -> Vec<MatrixFactorization> {
    (1..=n).map(|a| a_n(n, a)).collect()
}

/// `(u, v)` over `W = uv`.
pub fn uv() -> MatrixFactorization {
    MatrixFactorization::rank_one(&uv_ring(), "u*v", "u", "v").expect("valid factorization")
}

/// `(v, u)` over `W = uv`.
pub fn vu() -> MatrixFactorization {
    MatrixFactorization::rank_one(&uv_ring(), "u*v", "v", "u").expect("valid factorization")
}
