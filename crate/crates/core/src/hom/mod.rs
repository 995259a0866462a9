//! The ℤ/2-graded Hom complex between two factorizations and the decision
//! procedures built on it.
//!
//! Degree-0 elements are pairs `(p1 : E1 -> F1, p0 : E0 -> F0)`, degree-1
//! elements are pairs `(s0 : E0 -> F1, s1 : E1 -> F0)`. The differential is
//! `D p = f p - (-1)^k p e`, i.e.
//!
//! ```text
//! D(p1, p0) = (f0 p0 - p1 e0,  f1 p1 - p0 e1)     into (s0, s1) slots
//! D(s0, s1) = (f0 s1 + s0 e1,  f1 s0 + s1 e0)     into (p1, p0) slots
//! ```
//!
//! Each pair is flattened to a vector of length `2 rF rE`: first block, then
//! second block, each `rF x rE` block row-major.

pub mod oracle;

use std::fmt;

use crate::mf::{MFMorphism, MatrixFactorization, MfError};
use crate::poly::{
    for_each_quotient_monomial, kernel_representative, module_groebner, submodule_membership, syzygy_basis, Dim,
    GroebnerBasis, Lifter, PolyMatrix, Polynomial,
};

/// Explicit polynomial matrices of the Hom differential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomComplex {
    source: MatrixFactorization,
    target: MatrixFactorization,
    /// Even part `(p1, p0) -> (s0, s1)`.
    pub d_even: PolyMatrix,
    /// Odd part `(s0, s1) -> (p1, p0)`.
    pub d_odd: PolyMatrix,
}

/// `X -> A X` on `rows x cols` matrices, flattened row-major.
fn left_mul(a: &PolyMatrix, cols: usize) -> PolyMatrix {
    let rows = a.rows();
    let ring = a.ring();
    let mut out = PolyMatrix::zero(ring, rows * cols, a.cols() * cols);
    for i in 0..rows {
        for k in 0..a.cols() {
            let v = a.get(i, k);
            if v.is_zero() {
                continue;
            }
            for j in 0..cols {
                out.set(i * cols + j, k * cols + j, v.clone());
            }
        }
    }
    out
}

/// `X -> X B` on `rows x B.rows` matrices, flattened row-major.
fn right_mul(b: &PolyMatrix, rows: usize) -> PolyMatrix {
    let ring = b.ring();
    let (inner, cols) = (b.rows(), b.cols());
    let mut out = PolyMatrix::zero(ring, rows * cols, rows * inner);
    for i in 0..rows {
        for l in 0..inner {
            for j in 0..cols {
                let v = b.get(l, j);
                if !v.is_zero() {
                    out.set(i * cols + j, i * inner + l, v.clone());
                }
            }
        }
    }
    out
}

impl HomComplex {
    pub fn new(source: &MatrixFactorization, target: &MatrixFactorization) -> Result<Self, MfError> {
        source.check_context(target)?;
        let ring = source.ring();
        let (re, rf) = (source.rank(), target.rank());
        let (e1, e0) = (source.e1(), source.e0());
        let (f1, f0) = (target.e1(), target.e0());

        let l_f0 = left_mul(f0, re);
        let l_f1 = left_mul(f1, re);
        let r_e0 = right_mul(e0, rf);
        let r_e1 = right_mul(e1, rf);

        let d_even = PolyMatrix::block(ring, &[vec![&r_e0.neg(), &l_f0], vec![&l_f1, &r_e1.neg()]])?;
        let d_odd = PolyMatrix::block(ring, &[vec![&r_e1, &l_f0], vec![&l_f1, &r_e0]])?;
        Ok(HomComplex { source: source.clone(), target: target.clone(), d_even, d_odd })
    }

    pub fn source(&self) -> &MatrixFactorization {
        &self.source
    }

    pub fn target(&self) -> &MatrixFactorization {
        &self.target
    }

    /// Length of a flattened element of either parity.
    pub fn width(&self) -> usize {
        2 * self.source.rank() * self.target.rank()
    }

    /// Both `D_even D_odd` and `D_odd D_even` vanish.
    pub fn squares_to_zero(&self) -> bool {
        let a = self.d_even.mul(&self.d_odd).expect("square operators");
        let b = self.d_odd.mul(&self.d_even).expect("square operators");
        a.is_zero() && b.is_zero()
    }

    pub(crate) fn flatten(&self, first: &PolyMatrix, second: &PolyMatrix) -> Vec<Polynomial> {
        first.entries().iter().chain(second.entries()).cloned().collect()
    }

    pub(crate) fn unflatten(&self, v: &[Polynomial]) -> (PolyMatrix, PolyMatrix) {
        let (re, rf) = (self.source.rank(), self.target.rank());
        let n = re * rf;
        let ring = self.source.ring();
        let a = PolyMatrix::from_entries(ring, rf, re, v[..n].to_vec()).expect("block size");
        let b = PolyMatrix::from_entries(ring, rf, re, v[n..].to_vec()).expect("block size");
        (a, b)
    }
}

pub fn hom_complex(e: &MatrixFactorization, f: &MatrixFactorization) -> Result<HomComplex, MfError> {
    HomComplex::new(e, f)
}

/// Dimensions of `H^0` and `H^1` of the Hom complex with representative cocycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomReport {
    pub h0: Dim,
    pub h1: Dim,
    /// Degree-zero classes as morphisms `E -> F`.
    pub basis_even: Vec<MFMorphism>,
    /// Degree-one classes `(s0, s1)` as morphisms `E -> F[1]`, i.e. `(p1, p0) = (s1, s0)`.
    pub basis_odd: Vec<MFMorphism>,
}

impl HomReport {
    pub fn dims(&self) -> (Dim, Dim) {
        (self.h0, self.h1)
    }
}

impl fmt::Display for HomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(h0, h1) = ({}, {})", self.h0, self.h1)
    }
}

fn column_module(m: &PolyMatrix) -> GroebnerBasis {
    module_groebner(&m.columns(), m.rows(), m.ring()).expect("columns have matching length")
}

/// `ker(outgoing) / im(incoming)` with representatives (empty when infinite).
fn cohomology(outgoing: &PolyMatrix, incoming: &PolyMatrix) -> Result<(Dim, Vec<Vec<Polynomial>>), MfError> {
    let ring = outgoing.ring();
    let width = outgoing.cols();
    let kernel = module_groebner(&syzygy_basis(outgoing), width, ring)?;
    let image = column_module(incoming);
    let mut monos: Vec<(u32, usize, Vec<u32>)> = Vec::new();
    let finite = for_each_quotient_monomial(&kernel, &image, &mut |pos, e| {
        monos.push((e.iter().sum(), pos, e.to_vec()));
    })?;
    if !finite {
        return Ok((Dim::Infinite, Vec::new()));
    }
    monos.sort();
    let reps = monos.iter().map(|(_, pos, e)| kernel_representative(&kernel, &image, *pos, e)).collect();
    Ok((Dim::Finite(monos.len()), reps))
}

pub fn hom_dims(e: &MatrixFactorization, f: &MatrixFactorization) -> Result<HomReport, MfError> {
    let hc = HomComplex::new(e, f)?;
    let (h0, even) = cohomology(&hc.d_even, &hc.d_odd)?;
    let (h1, odd) = cohomology(&hc.d_odd, &hc.d_even)?;
    let f_shift = f.shift();
    let basis_even = even
        .iter()
        .map(|v| {
            let (p1, p0) = hc.unflatten(v);
            MFMorphism::new(e, f, p1, p0)
        })
        .collect::<Result<_, _>>()?;
    let basis_odd = odd
        .iter()
        .map(|v| {
            let (s0, s1) = hc.unflatten(v);
            MFMorphism::new(e, &f_shift, s1, s0)
        })
        .collect::<Result<_, _>>()?;
    Ok(HomReport { h0, h1, basis_even, basis_odd })
}

/// Homotopy `(s0 : E0 -> F1, s1 : E1 -> F0)` with
/// `p1 = f0 s1 + s0 e1` and `p0 = s1 e0 + f1 s0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homotopy {
    pub s0: PolyMatrix,
    pub s1: PolyMatrix,
}

impl Homotopy {
    /// The morphism `D(s)` this homotopy witnesses.
    pub fn boundary(&self, e: &MatrixFactorization, f: &MatrixFactorization) -> Result<(PolyMatrix, PolyMatrix), MfError> {
        let p1 = f.e0().mul(&self.s1)?.add(&self.s0.mul(e.e1())?)?;
        let p0 = self.s1.mul(e.e0())?.add(&f.e1().mul(&self.s0)?)?;
        Ok((p1, p0))
    }
}

/// Decides whether `p` is null-homotopic; on success returns a homotopy.
pub fn is_null_homotopic(p: &MFMorphism) -> Result<Option<Homotopy>, MfError> {
    let hc = HomComplex::new(p.source(), p.target())?;
    if p.is_zero() {
        let ring = p.ring();
        let z = PolyMatrix::zero(ring, p.target().rank(), p.source().rank());
        return Ok(Some(Homotopy { s0: z.clone(), s1: z }));
    }
    let v = hc.flatten(p.p1(), p.p0());
    let image = column_module(&hc.d_odd);
    if !submodule_membership(&v, &image)? {
        return Ok(None);
    }
    let a = Lifter::new(&hc.d_odd).lift(&v)?.expect("member of the image module lifts");
    let (s0, s1) = hc.unflatten(&a);
    Ok(Some(Homotopy { s0, s1 }))
}

pub fn is_contractible(e: &MatrixFactorization) -> Result<bool, MfError> {
    Ok(is_null_homotopic(&MFMorphism::identity(e))?.is_some())
}

pub fn is_homotopy_equivalence(p: &MFMorphism) -> Result<bool, MfError> {
    is_contractible(&p.cone()?.object)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mf::corpus;
    use crate::poly::RingContext;

    fn fin(n: usize) -> Dim {
        Dim::Finite(n)
    }

    #[test]
    fn differential_on_odp() {
        let e = corpus::a_n(1, 1);
        let hc = hom_complex(&e, &e).unwrap();
        assert_eq!(hc.d_even.to_strings(), vec![vec!["-x", "x"], vec!["x", "-x"]]);
        assert_eq!(hc.d_odd.to_strings(), vec![vec!["x", "x"], vec!["x", "x"]]);
        assert!(hc.squares_to_zero());
    }

    #[test]
    fn rank_one_shapes() {
        let e = corpus::a_n(3, 1);
        let f = corpus::a_n(3, 2);
        let hc = hom_complex(&e, &f).unwrap();
        assert_eq!((hc.d_even.rows(), hc.d_even.cols()), (2, 2));
        assert!(hc.squares_to_zero());
        assert!(hom_complex(&e, &corpus::uv()).is_err());
    }

    #[test]
    fn odp_dichotomy() {
        let e = corpus::a_n(1, 1);
        let r = hom_dims(&e, &e).unwrap();
        assert_eq!(r.dims(), (fin(1), fin(1)));
        assert_eq!(r.basis_even.len(), 1);
        assert_eq!(r.basis_odd.len(), 1);

        let uv = corpus::uv();
        assert_eq!(hom_dims(&uv, &corpus::vu()).unwrap().dims(), (fin(0), fin(1)));
        assert_eq!(hom_dims(&uv, &uv.shift()).unwrap().dims(), (fin(0), fin(1)));
        assert_eq!(hom_dims(&uv, &uv).unwrap().dims(), (fin(1), fin(0)));
    }

    #[test]
    fn a2_endomorphisms() {
        let r = RingContext::rational(&["x"]);
        let e = MatrixFactorization::rank_one(&r, "x^3", "x", "x^2").unwrap();
        let rep = hom_dims(&e, &e).unwrap();
        assert_eq!(rep.h0, fin(1));
        for b in &rep.basis_even {
            assert!(is_null_homotopic(b).unwrap().is_none());
        }
    }

    #[test]
    fn null_homotopy_examples() {
        let e = corpus::a_n(1, 1);
        let zero = MFMorphism::zero(&e, &e).unwrap();
        let h = is_null_homotopic(&zero).unwrap().unwrap();
        assert!(h.s0.is_zero() && h.s1.is_zero());
        assert!(is_null_homotopic(&MFMorphism::identity(&e)).unwrap().is_none());

        let x = Polynomial::var(e.ring(), "x").unwrap();
        let px = MFMorphism::identity(&e).scale(&x);
        let h = is_null_homotopic(&px).unwrap().expect("x * id is null-homotopic");
        let (p1, p0) = h.boundary(&e, &e).unwrap();
        assert_eq!(&p1, px.p1());
        assert_eq!(&p0, px.p0());
    }

    #[test]
    fn contractibility() {
        let r = RingContext::rational(&["x"]);
        let unit = MatrixFactorization::rank_one(&r, "x^2", "1", "x^2").unwrap();
        assert!(is_contractible(&unit).unwrap());
        assert!(!is_contractible(&corpus::a_n(1, 1)).unwrap());
        for e in corpus::a_n_family(3) {
            let c = MFMorphism::identity(&e).cone().unwrap();
            assert!(is_contractible(&c.object).unwrap());
        }
    }

    #[test]
    fn equivalences() {
        let e = corpus::a_n(1, 1);
        assert!(is_homotopy_equivalence(&MFMorphism::identity(&e)).unwrap());
        let f = corpus::a_n(2, 1);
        let g = corpus::a_n(2, 2);
        assert!(!is_homotopy_equivalence(&MFMorphism::zero(&f, &g).unwrap()).unwrap());
        let ss = e.shift().shift();
        let id = PolyMatrix::identity(e.ring(), 1);
        let p = MFMorphism::new(&e, &ss, id.clone(), id).unwrap();
        assert!(is_homotopy_equivalence(&p).unwrap());
    }
}
