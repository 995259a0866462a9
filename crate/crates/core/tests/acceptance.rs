//! Acceptance suite: one PASS/FAIL line per criterion, with elapsed time
//! against the allowed runtime. Exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use lgmf::cli::FactorizationFile;
use lgmf::hom::{hom_complex, hom_dims, is_contractible, is_homotopy_equivalence, oracle::truncated_hom_dims};
use lgmf::mf::{corpus, MFMorphism, MatrixFactorization};
use lgmf::mirror::{build_superpotential, critical_count, critical_values, fiber_cardinality, ToricSpec};
use lgmf::poly::linalg::Echelon;
use lgmf::poly::{
    buchberger, normal_form, Coeff, Dim, Field, GroebnerBasis, Monomial, MonomialOrder, PolyMatrix, Polynomial,
    RingContext,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (u32, &'static str, u64, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Aₙ indecomposables for `n <= 6` and the two rank-one factorizations of `uv`.
fn base_corpus() -> Vec<MatrixFactorization> {
    let mut out: Vec<MatrixFactorization> = (1..=6).flat_map(corpus::a_n_family).collect();
    out.push(corpus::uv());
    out.push(corpus::vu());
    out
}

fn same_context_pairs(objs: &[MatrixFactorization]) -> Vec<(&MatrixFactorization, &MatrixFactorization)> {
    let mut out = Vec::new();
    for e in objs {
        for f in objs {
            if e.same_context(f) {
                out.push((e, f));
            }
        }
    }
    out
}

fn structural_exactness() -> Check {
    let base = base_corpus();
    let mut all: Vec<MatrixFactorization> = Vec::new();
    for e in &base {
        all.push(e.clone());
        all.push(e.shift());
        if e.ring().vars() == ["x"] {
            all.push(e.knorrer().map_err(|x| x.to_string())?);
            all.push(e.tensor(&corpus::uv()).map_err(|x| x.to_string())?);
            all.push(e.tensor(&corpus::vu()).map_err(|x| x.to_string())?);
        }
    }
    for (e, f) in same_context_pairs(&base) {
        all.push(e.direct_sum(f).map_err(|x| x.to_string())?);
        all.push(MFMorphism::identity(e).cone().map_err(|x| x.to_string())?.object);
        all.push(MFMorphism::zero(e, f).map_err(|x| x.to_string())?.cone().map_err(|x| x.to_string())?.object);
    }
    for e in &all {
        let report = e.validate();
        ensure(report.is_valid(), || format!("invalid object: {report}"))?;
        let text = FactorizationFile::from_factorization(e).to_text();
        let twice = FactorizationFile::from_factorization(&e.shift().shift()).to_text();
        ensure(text == twice, || format!("shift twice changed\n{text}"))?;
    }
    Ok(format!("{} objects validated", all.len()))
}

fn triangulated_sanity() -> Check {
    let base = base_corpus();
    for e in &base {
        let c = MFMorphism::identity(e).cone().map_err(|x| x.to_string())?;
        ensure(is_contractible(&c.object).map_err(|x| x.to_string())?, || "cone(id) not contractible".into())?;
    }
    let pairs = same_context_pairs(&base);
    for (e, f) in &pairs {
        let c = MFMorphism::zero(e, f).map_err(|x| x.to_string())?.cone().map_err(|x| x.to_string())?;
        ensure(c.object == f.direct_sum(&e.shift()).map_err(|x| x.to_string())?, || "cone(0) is not F + E[1]".into())?;
        ensure(hom_complex(e, f).map_err(|x| x.to_string())?.squares_to_zero(), || "D^2 != 0".into())?;
    }
    Ok(format!("{} pairs checked", pairs.len()))
}

fn odp_dichotomy() -> Check {
    let e = corpus::a_n(1, 1);
    let r = hom_dims(&e, &e).map_err(|x| x.to_string())?;
    ensure((r.h0, r.h1) == (Dim::Finite(1), Dim::Finite(1)), || format!("End((x,x)) = {r}"))?;
    let es = e.shift();
    let id = PolyMatrix::identity(e.ring(), 1);
    let p = MFMorphism::new(&e, &es, id.clone(), id.neg()).map_err(|x| x.to_string())?;
    ensure(is_homotopy_equivalence(&p).map_err(|x| x.to_string())?, || "(x,x) not equivalent to its shift".into())?;

    let uv = corpus::uv();
    let r = hom_dims(&uv, &uv.shift()).map_err(|x| x.to_string())?;
    ensure(r.h0 == Dim::Finite(0), || format!("Hom((u,v),(u,v)[1]) = {r}"))?;
    Ok("End((x,x)) = (1, 1); (x,x) ~ (x,x)[1]; Hom((u,v),(u,v)[1]) has h0 = 0".to_string())
}

fn knorrer_periodicity() -> Check {
    let objs: Vec<MatrixFactorization> = (1..=4).flat_map(corpus::a_n_family).collect();
    let mut n = 0;
    for (e, f) in same_context_pairs(&objs) {
        let before = hom_dims(e, f).map_err(|x| x.to_string())?;
        let ke = e.knorrer().map_err(|x| x.to_string())?;
        let kf = f.knorrer().map_err(|x| x.to_string())?;
        let after = hom_dims(&ke, &kf).map_err(|x| x.to_string())?;
        ensure(before.dims() == after.dims(), || format!("{before} vs {after}"))?;
        n += 1;
    }
    Ok(format!("{n} pairs"))
}

fn oracle_equivalence() -> Check {
    let mut objs = base_corpus();
    objs.extend(base_corpus().iter().map(MatrixFactorization::shift));
    objs.extend((1..=2).flat_map(corpus::a_n_family).map(|e| e.knorrer().expect("fresh names")));
    let mut n = 0;
    for (e, f) in same_context_pairs(&objs) {
        let r = hom_dims(e, f).map_err(|x| x.to_string())?;
        if let (Dim::Finite(a), Dim::Finite(b)) = (r.h0, r.h1) {
            let o = truncated_hom_dims(e, f, 30).map_err(|x| x.to_string())?;
            ensure(o == Some((a, b)), || format!("Gröbner ({a}, {b}) vs oracle {o:?}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} finite-dimensional pairs"))
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn hori_vafa_counts() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (name, expected) in [("P1", 2), ("P2", 3), ("F1", 4), ("dP6", 6)] {
        let w = build_superpotential(&ToricSpec::preset(name).expect("preset")).map_err(|x| x.to_string())?;
        let mut settings = vec![w.unit_parameters()];
        for _ in 0..3 {
            settings.push(w.params().iter().map(|p| (p.clone(), q(rng.gen_range(1..50), rng.gen_range(1..50)))).collect());
        }
        for params in settings {
            let c = critical_count(&w, &params).map_err(|x| x.to_string())?;
            ensure(c == expected, || format!("{name} at {params:?}: {c} critical points"))?;
        }
    }
    let w = build_superpotential(&ToricSpec::projective_space(1)).map_err(|x| x.to_string())?;
    for (value, root) in [(q(1, 1), q(2, 1)), (q(4, 1), q(4, 1)), (q(9, 4), q(3, 1))] {
        let params = BTreeMap::from([("q".to_string(), value)]);
        let r = critical_values(&w, &params).map_err(|x| x.to_string())?;
        let vals = r.rational_values().unwrap_or_default();
        ensure(vals == vec![-root.clone(), root.clone()], || format!("P1 values {vals:?}"))?;
    }
    Ok("counts 2, 3, 4, 6 at four parameter settings each; P1 values ±2√q".to_string())
}

fn p1_desk_check() -> Check {
    // dim Hom(O, O(1)) in the Beilinson quiver of P^1: two arrows
    const BEILINSON_HOM_O_O1: usize = 2;
    let w = build_superpotential(&ToricSpec::projective_space(1)).map_err(|x| x.to_string())?;
    let n = fiber_cardinality(&w, &w.unit_parameters(), &q(0, 1)).map_err(|x| x.to_string())?;
    ensure(n == BEILINSON_HOM_O_O1, || format!("fiber over 0 has {n} points"))?;
    Ok(format!("fiber of z + 1/z over 0 has {n} points = dim Hom(O, O(1))"))
}

/// Membership of `f` in the ideal by linear algebra on `{m g_i : deg(m g_i) <= d}`.
fn truncated_member(f: &Polynomial, gens: &[Polynomial], d: u32) -> bool {
    let r = f.ring();
    let n = r.nvars();
    let mut monos = vec![Monomial::one(n)];
    for _ in 0..d {
        let mut next = monos.clone();
        for m in &monos {
            for v in 0..n {
                let t = m.mul(&Monomial::var(n, v, 1));
                if !next.contains(&t) {
                    next.push(t);
                }
            }
        }
        monos = next;
    }
    let mut index: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut row = |p: &Polynomial| -> Vec<(usize, Coeff)> {
        p.terms()
            .iter()
            .map(|(m, c)| {
                let k = index.len();
                (*index.entry(m.exponents().to_vec()).or_insert(k), c.clone())
            })
            .collect()
    };
    let mut ech = Echelon::new();
    for g in gens {
        let gd = g.total_degree().unwrap_or(0);
        for m in monos.iter().filter(|m| m.degree() + gd <= d) {
            let one = r.field().one();
            ech.insert(row(&g.mul_term(m, &one)));
        }
    }
    !ech.insert(row(f))
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &lgmf::poly::Ring, deg: u32, terms: usize) -> Polynomial {
    let n = ring.nvars();
    let ts = (0..terms)
        .map(|_| {
            let mut e = vec![0u32; n];
            let total = rng.gen_range(0..=deg);
            for _ in 0..total {
                e[rng.gen_range(0..n)] += 1;
            }
            (Monomial::from_exponents(&e), ring.field().from_i64(rng.gen_range(-5..=5)))
        })
        .collect();
    Polynomial::from_terms(ring, ts)
}

fn groebner_suite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(32749);
    let names = ["x", "y", "z"];
    let orders = [MonomialOrder::Lex, MonomialOrder::GrLex, MonomialOrder::GrevLex];
    let mut members = 0;
    for i in 0..200 {
        let field = if i % 2 == 0 { Field::Rational } else { Field::prime(32749).expect("prime") };
        let order = orders[i % 3];
        let max_vars = if order == MonomialOrder::Lex { 2 } else { 3 };
        let nvars = rng.gen_range(1..=max_vars);
        let ring = RingContext::new(&names[..nvars], field, order).map_err(|x| x.to_string())?;
        let ngens = rng.gen_range(1..=nvars);
        let gens: Vec<Polynomial> = (0..ngens)
            .map(|_| {
                let terms = rng.gen_range(1..=4);
                random_poly(&mut rng, &ring, 3, terms)
            })
            .filter(|g| !g.is_zero())
            .collect();
        let gb: GroebnerBasis = buchberger(&gens, &ring).map_err(|x| x.to_string())?;
        for g in &gens {
            ensure(normal_form(g, &gb).map_err(|x| x.to_string())?.is_zero(), || format!("NF({g}) != 0"))?;
        }
        let member = gens.iter().fold(Polynomial::zero(&ring), |acc, g| acc.add(&g.mul(&random_poly(&mut rng, &ring, 2, 3))));
        let other = random_poly(&mut rng, &ring, 3, 4);
        for f in [member, other] {
            let nf = normal_form(&f, &gb).map_err(|x| x.to_string())?;
            ensure(normal_form(&nf, &gb).map_err(|x| x.to_string())? == nf, || "normal form not idempotent".into())?;
            let by_gb = nf.is_zero();
            let d = f.total_degree().unwrap_or(0) + 6;
            let by_lin = truncated_member(&f, &gens, d);
            ensure(by_gb == by_lin, || format!("membership of {f} in {gens:?}: Gröbner {by_gb}, linear {by_lin}"))?;
            members += usize::from(by_gb);
        }
    }
    Ok(format!("200 ideals, 400 membership queries ({members} members)"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        (1, "structural exactness", 5, structural_exactness),
        (2, "triangulated sanity", 30, triangulated_sanity),
        (3, "ODP dichotomy", 10, odp_dichotomy),
        (4, "Knörrer periodicity", 120, knorrer_periodicity),
        (5, "oracle equivalence", 120, oracle_equivalence),
        (6, "Hori–Vafa counts", 60, hori_vafa_counts),
        (7, "P1 desk check", 10, p1_desk_check),
        (8, "Gröbner property suite", 120, groebner_suite),
    ];
    let mut failed = 0;
    for (n, name, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let slow = elapsed > Duration::from_secs(limit);
        let status = if result.is_ok() && !slow { "PASS" } else { "FAIL" };
        println!("criterion {n} {status} {name} ({:.2}s, limit {limit}s)", elapsed.as_secs_f64());
        match result {
            Ok(detail) => println!("    {detail}"),
            Err(e) => println!("    error: {e}"),
        }
        if status == "FAIL" {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
