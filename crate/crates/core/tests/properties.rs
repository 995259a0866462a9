use std::collections::BTreeMap;

use lgmf::hom::{hom_complex, hom_dims, is_contractible};
use lgmf::mf::{corpus, MFMorphism, MatrixFactorization};
use lgmf::mirror::{build_superpotential, critical_count, ToricSpec};
use lgmf::poly::{buchberger, normal_form, Coeff, Field, Monomial, MonomialOrder, Polynomial, Ring, RingContext};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn ring(field: Field, order: MonomialOrder) -> Ring {
    RingContext::new(&["x", "y", "z"], field, order).unwrap()
}

fn poly_strategy(r: Ring, max_terms: usize, max_deg: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(((0..=max_deg, 0..=max_deg, 0..=max_deg), -9i64..=9), 0..=max_terms).prop_map(move |terms| {
        let terms = terms
            .into_iter()
            .filter(|((a, b, c), _)| a + b + c <= max_deg)
            .map(|((a, b, c), k)| (Monomial::from_exponents(&[a, b, c]), r.field().from_i64(k)))
            .collect();
        Polynomial::from_terms(&r, terms)
    })
}

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::prime(32749).unwrap()), Just(Field::prime(7).unwrap())]
}

fn order_strategy() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![Just(MonomialOrder::Lex), Just(MonomialOrder::GrLex), Just(MonomialOrder::GrevLex)]
}

fn ring_and_polys(n: usize, terms: usize, deg: u32) -> impl Strategy<Value = (Ring, Vec<Polynomial>)> {
    (field_strategy(), order_strategy()).prop_flat_map(move |(f, o)| {
        let r = ring(f, o);
        (Just(r.clone()), prop::collection::vec(poly_strategy(r, terms, deg), n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((_, ps) in ring_and_polys(3, 5, 3)) {
        let (a, b, c) = (&ps[0], &ps[1], &ps[2]);
        prop_assert_eq!(a.mul(b), b.mul(a));
        prop_assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
        prop_assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
        prop_assert!(a.sub(a).is_zero());
    }

    #[test]
    fn display_parses_back((r, ps) in ring_and_polys(1, 6, 4)) {
        let p = &ps[0];
        prop_assert_eq!(&Polynomial::parse(&r, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn groebner_reduces_generators((_, ps) in ring_and_polys(2, 3, 3), extra in poly_strategy(ring(Field::Rational, MonomialOrder::GrevLex), 4, 3)) {
        let r = ps[0].ring().clone();
        let gb = buchberger(&ps, &r).unwrap();
        prop_assert!(gb.is_reduced_groebner());
        for g in &ps {
            prop_assert!(normal_form(g, &gb).unwrap().is_zero());
        }
        let f = Polynomial::parse(&r, &extra.to_string()).unwrap();
        let nf = normal_form(&f, &gb).unwrap();
        prop_assert_eq!(normal_form(&nf, &gb).unwrap(), nf.clone());
        prop_assert!(normal_form(&f.sub(&nf), &gb).unwrap().is_zero());
    }
}

/// Aₙ factorizations for `n <= 4` together with their shifts.
fn small_corpus() -> Vec<MatrixFactorization> {
    (1..=4).flat_map(corpus::a_n_family).flat_map(|e| [e.shift(), e]).collect()
}

fn pair_strategy() -> impl Strategy<Value = (MatrixFactorization, MatrixFactorization)> {
    let c = small_corpus();
    let n = c.len();
    (0..n, 0..n).prop_filter_map("same superpotential", move |(i, j)| {
        let (e, f) = (c[i].clone(), c[j].clone());
        (e.w() == f.w()).then_some((e, f))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn shift_is_an_involution_up_to_equality((e, _) in pair_strategy()) {
        prop_assert_eq!(e.shift().shift(), e.clone());
        prop_assert_eq!(e.shift_by(2), e);
    }

    #[test]
    fn differential_squares_to_zero((e, f) in pair_strategy()) {
        prop_assert!(hom_complex(&e, &f).unwrap().squares_to_zero());
        prop_assert!(hom_complex(&e.direct_sum(&f).unwrap(), &f).unwrap().squares_to_zero());
    }

    #[test]
    fn shift_swaps_hom_degrees((e, f) in pair_strategy()) {
        let r = hom_dims(&e, &f).unwrap();
        let s = hom_dims(&e, &f.shift()).unwrap();
        prop_assert_eq!((r.h0, r.h1), (s.h1, s.h0));
    }

    #[test]
    fn hom_is_additive((e, f) in pair_strategy(), g_idx in 0usize..4) {
        let n = e.w().total_degree().unwrap() - 1;
        let g = corpus::a_n_family(n)[g_idx % n as usize].clone();
        let sum = hom_dims(&e.direct_sum(&g).unwrap(), &f).unwrap();
        let a = hom_dims(&e, &f).unwrap();
        let b = hom_dims(&g, &f).unwrap();
        prop_assert_eq!((sum.h0, sum.h1), (a.h0 + b.h0, a.h1 + b.h1));
    }

    #[test]
    fn cone_of_identity_is_contractible((e, _) in pair_strategy()) {
        let c = MFMorphism::identity(&e).cone().unwrap();
        prop_assert!(is_contractible(&c.object).unwrap());
    }

    #[test]
    fn cone_of_zero_splits((e, f) in pair_strategy()) {
        let c = MFMorphism::zero(&e, &f).unwrap().cone().unwrap();
        prop_assert_eq!(c.object, f.direct_sum(&e.shift()).unwrap());
    }
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn projective_counts(n in 1usize..=3, num in 1i64..20, den in 1i64..20) {
        let w = build_superpotential(&ToricSpec::projective_space(n)).unwrap();
        let mut p = BTreeMap::new();
        p.insert("q".to_string(), rational(num, den));
        prop_assert_eq!(critical_count(&w, &p).unwrap(), n + 1);
    }

    #[test]
    fn count_ignores_basis_choice(first in 0usize..3, num in 1i64..20, den in 1i64..20) {
        let mut spec = ToricSpec::projective_space(2);
        spec.basis = vec![first, (first + 1) % 3];
        let w = build_superpotential(&spec).unwrap();
        let mut p = BTreeMap::new();
        p.insert("q".to_string(), rational(num, den));
        prop_assert_eq!(critical_count(&w, &p).unwrap(), 3);
    }
}

#[test]
fn fp_coefficients_wrap() {
    let f = Field::prime(7).unwrap();
    let r = ring(f, MonomialOrder::GrevLex);
    let p = Polynomial::parse(&r, "8*x - 1/2").unwrap();
    assert_eq!(p.terms()[0].1, Coeff::P { v: 1, p: 7 });
    assert_eq!(p.to_string(), "x + 3");
}
