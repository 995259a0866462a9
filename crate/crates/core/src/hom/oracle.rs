//! Hom dimensions by degree truncation and plain linear algebra.
//!
//! Everything here is computed from the defining matrix identities
//! `D p = f p - p e` and `D s = f s + s e` on finite-dimensional windows of
//! polynomial matrices; no Gröbner bases are involved.
//!
//! For a window `d`, with `Z_d` the cocycles of degree `<= d` and `B_d` the
//! coboundaries of cochains of degree `<= d` whose boundary stays in degree
//! `<= d`, the estimate is `dim Z_d - dim B_d`. The window grows until two
//! consecutive estimates agree.

use std::collections::BTreeMap;

use crate::mf::{MatrixFactorization, MfError};
use crate::poly::linalg::Echelon;
use crate::poly::{Coeff, Monomial, PolyMatrix, Polynomial};

/// Exponent vectors of total degree `<= d`.
fn monomials_up_to(nvars: usize, d: u32) -> Vec<Monomial> {
    fn go(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            go(i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(0, d, &mut vec![0; nvars], &mut out);
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Parity {
    Even,
    Odd,
}

/// Images of all basis cochains of degree `<= d` of the given parity, as
/// sparse coordinate vectors together with a flag per coordinate marking
/// output degree `> d`.
struct Window {
    unknowns: usize,
    images: Vec<Vec<(usize, Coeff, bool)>>,
}

fn window(e: &MatrixFactorization, f: &MatrixFactorization, parity: Parity, d: u32) -> Result<Window, MfError> {
    let ring = e.ring();
    let (re, rf) = (e.rank(), f.rank());
    let (e1, e0, f1, f0) = (e.e1(), e.e0(), f.e1(), f.e0());
    let monos = monomials_up_to(ring.nvars(), d);
    let mut coords: BTreeMap<(usize, usize, usize, Monomial), usize> = BTreeMap::new();
    let mut images = Vec::new();
    let mut unknowns = 0;
    for block in 0..2 {
        for i in 0..rf {
            for j in 0..re {
                for mu in &monos {
                    unknowns += 1;
                    let mut x = PolyMatrix::zero(ring, rf, re);
                    x.set(i, j, Polynomial::term(ring, mu.clone(), ring.field().one()));
                    let z = PolyMatrix::zero(ring, rf, re);
                    let (a, b) = if block == 0 { (x, z) } else { (z, x) };
                    let out = match parity {
                        // (p1, p0) -> (f0 p0 - p1 e0, f1 p1 - p0 e1)
                        Parity::Even => [f0.mul(&b)?.sub(&a.mul(e0)?)?, f1.mul(&a)?.sub(&b.mul(e1)?)?],
                        // (s0, s1) -> (f0 s1 + s0 e1, f1 s0 + s1 e0)
                        Parity::Odd => [f0.mul(&b)?.add(&a.mul(e1)?)?, f1.mul(&a)?.add(&b.mul(e0)?)?],
                    };
                    let mut row = Vec::new();
                    for (ob, m) in out.iter().enumerate() {
                        for r in 0..rf {
                            for c in 0..re {
                                for (mono, coeff) in m.get(r, c).terms() {
                                    let next = coords.len();
                                    let idx = *coords.entry((ob, r, c, mono.clone())).or_insert(next);
                                    row.push((idx, coeff.clone(), mono.degree() > d));
                                }
                            }
                        }
                    }
                    images.push(row);
                }
            }
        }
    }
    Ok(Window { unknowns, images })
}

fn rank_of(rows: impl Iterator<Item = Vec<(usize, Coeff)>>) -> usize {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

/// `dim Z_d - dim B_d` for the given parity of cocycles.
fn estimate(e: &MatrixFactorization, f: &MatrixFactorization, parity: Parity, d: u32) -> Result<usize, MfError> {
    let other = if parity == Parity::Even { Parity::Odd } else { Parity::Even };
    let closed = window(e, f, parity, d)?;
    let cocycles = closed.unknowns - rank_of(closed.images.iter().map(|r| r.iter().map(|(i, c, _)| (*i, c.clone())).collect()));
    let incoming = window(e, f, other, d)?;
    let full = rank_of(incoming.images.iter().map(|r| r.iter().map(|(i, c, _)| (*i, c.clone())).collect()));
    let high = rank_of(
        incoming
            .images
            .iter()
            .map(|r| r.iter().filter(|t| t.2).map(|(i, c, _)| (*i, c.clone())).collect()),
    );
    Ok(cocycles - (full - high))
}

/// `(h0, h1)` once two consecutive windows agree, starting from the largest
/// entry degree of the four matrices. `None` if no agreement is reached by
/// `max_degree`.
pub fn truncated_hom_dims(
    e: &MatrixFactorization,
    f: &MatrixFactorization,
    max_degree: u32,
) -> Result<Option<(usize, usize)>, MfError> {
    e.check_context(f)?;
    let start = [e.e1(), e.e0(), f.e1(), f.e0()].iter().map(|m| m.max_degree()).max().unwrap_or(0);
    let mut prev: Option<(usize, usize)> = None;
    for d in start..=max_degree.max(start) {
        let cur = (estimate(e, f, Parity::Even, d)?, estimate(e, f, Parity::Odd, d)?);
        if prev == Some(cur) {
            return Ok(Some(cur));
        }
        prev = Some(cur);
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mf::corpus;

    #[test]
    fn window_monomials() {
        assert_eq!(monomials_up_to(2, 2).len(), 6);
        assert_eq!(monomials_up_to(0, 3).len(), 1);
    }

    #[test]
    fn odp_by_truncation() {
        let e = corpus::a_n(1, 1);
        assert_eq!(truncated_hom_dims(&e, &e, 8).unwrap(), Some((1, 1)));
        let uv = corpus::uv();
        assert_eq!(truncated_hom_dims(&uv, &corpus::vu(), 8).unwrap(), Some((0, 1)));
    }

    #[test]
    fn a_n_by_truncation() {
        // End(x^a, x^(n+1-a)) has dimension min(a, n+1-a) in both degrees
        for n in 1..=4u32 {
            for a in 1..=n {
                let e = corpus::a_n(n, a);
                let m = a.min(n + 1 - a) as usize;
                assert_eq!(truncated_hom_dims(&e, &e, 12).unwrap(), Some((m, m)), "n={n} a={a}");
            }
        }
    }
}
