use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::{is_identifier, write_laurent_term, Coeff, Field, LaurentPolynomial, MonomialOrder, Ring, RingContext};

use super::MirrorError;

/// Linear relation `Σ coeffs[i] T_i = t` among the ray coordinates, with
/// `q = e^{-t}` named by `param`. A relation without a parameter has `t = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub coeffs: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub param: Option<String>,
}

/// Fan data: primitive ray generators, their relations, and the rays used as
/// coordinates on the mirror torus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricSpec {
    pub dimension: usize,
    pub rays: Vec<Vec<i64>>,
    pub relations: Vec<Relation>,
    pub basis: Vec<usize>,
}

fn rel(coeffs: &[i64], param: Option<&str>) -> Relation {
    Relation { coeffs: coeffs.to_vec(), param: param.map(str::to_string) }
}

impl ToricSpec {
    /// `P^n`: rays `e_1, ..., e_n, -(e_1 + ... + e_n)`.
    pub fn projective_space(n: usize) -> ToricSpec {
        let mut rays: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        rays.push(vec![-1; n]);
        ToricSpec { dimension: n, rays, relations: vec![rel(&vec![1; n + 1], Some("q"))], basis: (0..n).collect() }
    }

    /// Hirzebruch surface `F_1`.
    pub fn f1() -> ToricSpec {
        ToricSpec {
            dimension: 2,
            rays: vec![vec![1, 0], vec![0, 1], vec![-1, -1], vec![0, -1]],
            relations: vec![rel(&[1, 1, 1, 0], Some("q_t")), rel(&[0, 1, 0, 1], Some("q_s"))],
            basis: vec![0, 1],
        }
    }

    /// Del Pezzo surface of degree 6 (the hexagon fan).
    pub fn dp6() -> ToricSpec {
        ToricSpec {
            dimension: 2,
            rays: vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![-1, 0], vec![0, -1], vec![-1, -1]],
            relations: vec![
                rel(&[-1, -1, 1, 0, 0, 0], None),
                rel(&[1, 0, 0, 1, 0, 0], Some("q_r")),
                rel(&[0, 1, 0, 0, 1, 0], Some("q_s")),
                rel(&[1, 1, 0, 0, 0, 1], Some("q_t")),
            ],
            basis: vec![0, 1],
        }
    }

    /// Built-in fans by name: `P1`, `P2`, `F1`, `dP6`.
    pub fn preset(name: &str) -> Option<ToricSpec> {
        match name {
            "P1" => Some(Self::projective_space(1)),
            "P2" => Some(Self::projective_space(2)),
            "F1" => Some(Self::f1()),
            "dP6" => Some(Self::dp6()),
            _ => None,
        }
    }

    pub const PRESETS: [&'static str; 4] = ["P1", "P2", "F1", "dP6"];

    /// Shape checks, unimodularity of the basis, and consistency of every relation.
    pub fn validate(&self) -> Result<(), MirrorError> {
        let n = self.dimension;
        if let Some((i, r)) = self.rays.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(MirrorError::InvalidSpec(format!("ray {i} has {} coordinates, expected {n}", r.len())));
        }
        if self.basis.len() != n {
            return Err(MirrorError::InvalidSpec(format!("basis has {} rays, expected {n}", self.basis.len())));
        }
        for (k, &b) in self.basis.iter().enumerate() {
            if b >= self.rays.len() || self.basis[..k].contains(&b) {
                return Err(MirrorError::InvalidSpec(format!("basis entry {b} is out of range or repeated")));
            }
        }
        let m: Vec<Vec<i64>> = self.basis.iter().map(|&b| self.rays[b].clone()).collect();
        let det = determinant(&m);
        if det.abs() != BigRational::one() {
            return Err(MirrorError::NonUnimodularBasis(det.to_string()));
        }
        for (j, r) in self.relations.iter().enumerate() {
            if r.coeffs.len() != self.rays.len() {
                return Err(MirrorError::InvalidSpec(format!(
                    "relation {j} has {} coefficients, expected {}",
                    r.coeffs.len(),
                    self.rays.len()
                )));
            }
            if let Some(p) = &r.param {
                if !is_identifier(p) {
                    return Err(MirrorError::InvalidSpec(format!("invalid parameter name '{p}'")));
                }
            }
            let sum: Vec<i64> = (0..n).map(|k| r.coeffs.iter().zip(&self.rays).map(|(a, v)| a * v[k]).sum()).collect();
            if sum.iter().any(|&s| s != 0) {
                return Err(MirrorError::InconsistentRelation(j));
            }
        }
        Ok(())
    }

    /// Parameter names in order of first appearance.
    pub fn parameters(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for r in &self.relations {
            if let Some(p) = &r.param {
                if !out.contains(p) {
                    out.push(p.clone());
                }
            }
        }
        out
    }
}

/// Exact determinant of a small integer matrix.
#[allow(clippy::needless_range_loop)]
fn determinant(m: &[Vec<i64>]) -> BigRational {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for r in c + 1..n {
            let f = &a[r][c] / &a[c][c];
            for k in c..n {
                let v = &f * &a[c][k];
                a[r][k] -= v;
            }
        }
    }
    det
}

/// One ray's contribution `(Π q^{k}) · Y^{exponents}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirrorTerm {
    pub ray: usize,
    pub exponents: Vec<i64>,
    pub params: Vec<(String, i64)>,
}

/// Hori–Vafa superpotential with symbolic parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperpotentialSpec {
    vars: Vec<String>,
    params: Vec<String>,
    terms: Vec<MirrorTerm>,
}

pub fn build_superpotential(spec: &ToricSpec) -> Result<SuperpotentialSpec, MirrorError> {
    spec.validate()?;
    let n = spec.dimension;
    let mut terms = Vec::with_capacity(spec.rays.len());
    for ray in 0..spec.rays.len() {
        if let Some(k) = spec.basis.iter().position(|&b| b == ray) {
            let exponents = (0..n).map(|i| i64::from(i == k)).collect();
            terms.push(MirrorTerm { ray, exponents, params: Vec::new() });
            continue;
        }
        let resolving = spec.relations.iter().find(|r| {
            r.coeffs[ray].abs() == 1
                && r.coeffs.iter().enumerate().all(|(i, &a)| a == 0 || i == ray || spec.basis.contains(&i))
        });
        let Some(r) = resolving else {
            return Err(MirrorError::UnresolvableRay(ray));
        };
        // T_ray = s (t - Σ_basis a_i T_i) with s = a_ray = ±1
        let s = r.coeffs[ray];
        let exponents = spec.basis.iter().map(|&b| -s * r.coeffs[b]).collect();
        let params = r.param.iter().map(|p| (p.clone(), s)).collect();
        terms.push(MirrorTerm { ray, exponents, params });
    }
    Ok(SuperpotentialSpec { vars: (1..=n).map(|i| format!("Y{i}")).collect(), params: spec.parameters(), terms })
}

impl SuperpotentialSpec {
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn terms(&self) -> &[MirrorTerm] {
        &self.terms
    }

    pub fn dimension(&self) -> usize {
        self.vars.len()
    }

    /// `ℚ[Y_1, ..., Y_n]` with grevlex order.
    pub fn ring(&self) -> Ring {
        RingContext::new(&self.vars, Field::Rational, MonomialOrder::GrevLex).expect("Y variables are valid")
    }

    /// Every parameter set to one.
    pub fn unit_parameters(&self) -> BTreeMap<String, BigRational> {
        self.params.iter().map(|p| (p.clone(), BigRational::one())).collect()
    }

    /// The Laurent polynomial over ℚ at the given positive parameter values.
    pub fn specialize(&self, values: &BTreeMap<String, BigRational>) -> Result<LaurentPolynomial, MirrorError> {
        if let Some(k) = values.keys().find(|k| !self.params.contains(k)) {
            return Err(MirrorError::UnknownParameter(k.clone()));
        }
        for p in &self.params {
            match values.get(p) {
                None => return Err(MirrorError::MissingParameter(p.clone())),
                Some(v) if !v.is_positive() => return Err(MirrorError::NonPositiveParameter(p.clone())),
                Some(_) => {}
            }
        }
        let ring = self.ring();
        let mut w = LaurentPolynomial::zero(&ring);
        for t in &self.terms {
            let mut c = BigRational::one();
            for (p, k) in &t.params {
                let v = &values[p];
                c *= if *k >= 0 { v.pow(*k as i32) } else { v.recip().pow((-k) as i32) };
            }
            w.add_term(t.exponents.clone(), Coeff::Q(c));
        }
        Ok(w)
    }
}

struct TermDisplay<'a>(&'a SuperpotentialSpec, &'a MirrorTerm);

impl fmt::Display for TermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (spec, t) = (self.0, self.1);
        let mut vars = spec.vars.clone();
        let mut exps = t.exponents.clone();
        for (p, k) in &t.params {
            vars.push(p.clone());
            exps.push(*k);
        }
        write_laurent_term(f, &vars, "1", &exps)
    }
}

impl fmt::Display for SuperpotentialSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", TermDisplay(self, t))?;
        }
        Ok(())
    }
}
