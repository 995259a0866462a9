use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::{
    buchberger, normal_form, quotient_dim, Coeff, Dim, Field, GroebnerBasis, LaurentPolynomial, Monomial,
    MonomialOrder, Polynomial, Ring, RingContext,
};

use super::univariate::{self, Dense};
use super::{MirrorError, SuperpotentialSpec};

type Params = BTreeMap<String, BigRational>;

/// Generators `Y_i ∂W/∂Y_i` (denominators cleared) and `z Y_1⋯Y_n - 1` in a
/// ring whose first variables are the `Y_i` and which contains `z` at index `n`.
fn critical_generators(w: &LaurentPolynomial, target: &Ring) -> Vec<Polynomial> {
    let n = w.ring().nvars();
    let map: Vec<usize> = (0..n).collect();
    let mut gens: Vec<Polynomial> = (0..n)
        .map(|i| {
            let (num, _) = w.euler_derivative(i).numerator_denominator();
            num.embed(target, &map)
        })
        .collect();
    let mut all = vec![1u32; target.nvars()];
    for e in all.iter_mut().skip(n + 1) {
        *e = 0;
    }
    let one = Field::Rational.one();
    gens.push(Polynomial::from_terms(
        target,
        vec![(Monomial::from_exponents(&all), one.clone()), (target.one_monomial(), one.neg())],
    ));
    gens
}

/// Gröbner basis (grevlex) of the critical ideal of `W` on the torus, in
/// `ℚ[Y_1, ..., Y_n, z]`.
pub fn critical_ideal(w: &SuperpotentialSpec, params: &Params) -> Result<GroebnerBasis, MirrorError> {
    let lw = w.specialize(params)?;
    let ring = w.ring().extend(&["z"])?;
    Ok(buchberger(&critical_generators(&lw, &ring), &ring)?)
}

/// Number of critical points on the torus, with multiplicity.
pub fn critical_count(w: &SuperpotentialSpec, params: &Params) -> Result<usize, MirrorError> {
    match quotient_dim(&critical_ideal(w, params)?) {
        Dim::Finite(n) => Ok(n),
        Dim::Infinite => Err(MirrorError::InfiniteCriticalLocus),
    }
}

/// Critical values as the roots of a univariate polynomial in `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalReport {
    pub count: usize,
    /// Monic generator of the elimination ideal in `ℚ[w]`; `1` when there are no critical points.
    pub value_polynomial: Polynomial,
    pub distinct_values: bool,
}

impl CriticalReport {
    pub fn degree(&self) -> usize {
        self.value_polynomial.total_degree().unwrap_or(0) as usize
    }

    /// Rational critical values in increasing order, when the rational-root
    /// search is feasible.
    pub fn rational_values(&self) -> Option<Vec<BigRational>> {
        univariate::rational_roots(&self.dense())
    }

    /// Whether `value` is a root of the value polynomial.
    pub fn is_critical(&self, value: &BigRational) -> bool {
        univariate::eval(&self.dense(), value).is_zero()
    }

    fn dense(&self) -> Dense {
        univariate::from_polynomial(&self.value_polynomial, 0)
    }
}

/// The value polynomial generates the elimination ideal of the critical ideal
/// plus `w·Y^d - N` (where `W = N / Y^d`) in `ℚ[w]`. That generator is the
/// minimal polynomial of multiplication by `W` on the finite critical
/// algebra, computed here from normal forms of the powers of `W`.
pub fn critical_values(w: &SuperpotentialSpec, params: &Params) -> Result<CriticalReport, MirrorError> {
    let gb = critical_ideal(w, params)?;
    let count = match quotient_dim(&gb) {
        Dim::Finite(n) => n,
        Dim::Infinite => return Err(MirrorError::InfiniteCriticalLocus),
    };
    let lw = w.specialize(params)?;
    let wring = RingContext::new(&["w"], Field::Rational, MonomialOrder::GrevLex)?;
    let value_polynomial = if count == 0 {
        Polynomial::one(&wring)
    } else {
        let coeffs = minimal_polynomial(&torus_element(&lw, gb.ring()), &gb)?;
        let terms = coeffs
            .into_iter()
            .enumerate()
            .map(|(k, c)| (Monomial::from_exponents(&[k as u32]), Coeff::Q(c)))
            .collect();
        Polynomial::from_terms(&wring, terms)
    };
    let distinct_values = univariate::is_squarefree(&univariate::from_polynomial(&value_polynomial, 0));
    Ok(CriticalReport { count, value_polynomial, distinct_values })
}

/// `W` as a polynomial in `ℚ[Y, z]`, using `z = 1 / (Y_1⋯Y_n)`.
fn torus_element(w: &LaurentPolynomial, ring: &Ring) -> Polynomial {
    let n = w.ring().nvars();
    let d = w.denominator_exponents();
    let top = d.iter().copied().max().unwrap_or(0);
    let mut shift: Vec<u32> = d.iter().map(|&di| top - di).collect();
    shift.push(top);
    let map: Vec<usize> = (0..n).collect();
    let (num, _) = w.numerator_denominator();
    num.embed(ring, &map).mul(&Polynomial::term(ring, Monomial::from_exponents(&shift), Field::Rational.one()))
}

type Sparse = BTreeMap<Vec<u32>, BigRational>;

fn to_sparse(p: &Polynomial) -> Sparse {
    p.terms()
        .iter()
        .map(|(m, c)| (m.exponents().to_vec(), c.as_rational().expect("rational coefficients").clone()))
        .collect()
}

fn axpy(dst: &mut Sparse, factor: &BigRational, src: &Sparse) {
    for (k, v) in src {
        let e = dst.entry(k.clone()).or_insert_with(BigRational::zero);
        *e -= factor * v;
        if e.is_zero() {
            dst.remove(k);
        }
    }
}

/// Monic minimal polynomial (lowest coefficient first) of multiplication by
/// `f` on `ℚ[Y, z] / I`.
fn minimal_polynomial(f: &Polynomial, gb: &GroebnerBasis) -> Result<Dense, MirrorError> {
    // rows: (reduced normal form, combination of powers producing it)
    let mut rows: Vec<(Vec<u32>, Sparse, Dense)> = Vec::new();
    let mut power = normal_form(&Polynomial::one(gb.ring()), gb)?;
    for k in 0.. {
        let mut v = to_sparse(&power);
        let mut combo: Dense = vec![BigRational::zero(); k + 1];
        combo[k] = BigRational::one();
        for (pivot, row, rc) in &rows {
            if let Some(c) = v.get(pivot).cloned() {
                axpy(&mut v, &c, row);
                for (i, x) in rc.iter().enumerate() {
                    combo[i] -= &c * x;
                }
            }
        }
        match v.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            None => return Ok(univariate::trim(combo)),
            Some((pivot, lead)) => {
                let inv = BigRational::one() / lead;
                let v: Sparse = v.into_iter().map(|(m, c)| (m, c * &inv)).collect();
                let combo = combo.into_iter().map(|c| c * &inv).collect();
                rows.push((pivot, v, combo));
            }
        }
        power = normal_form(&power.mul(f), gb)?;
    }
    unreachable!("the quotient algebra is finite-dimensional")
}

/// Number of torus points in `W = value` for a one-variable superpotential.
pub fn fiber_cardinality(w: &SuperpotentialSpec, params: &Params, value: &BigRational) -> Result<usize, MirrorError> {
    if w.dimension() != 1 {
        return Err(MirrorError::NotOneDimensional(w.dimension()));
    }
    let report = critical_values(w, params)?;
    if report.is_critical(value) {
        return Err(MirrorError::CriticalValue(value.to_string()));
    }
    let (num, den) = w.specialize(params)?.numerator_denominator();
    let shift = Polynomial::term(num.ring(), den, Coeff::Q(value.clone()));
    let eq = univariate::from_polynomial(&num.sub(&shift), 0);
    Ok(univariate::squarefree_degree(&univariate::strip_zero_roots(&eq)))
}
