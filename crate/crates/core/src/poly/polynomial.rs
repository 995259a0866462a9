use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ring::same_ring;
use super::{Coeff, Monomial, PolyError, Ring};

/// Sparse multivariate polynomial. Terms are kept strictly decreasing under the
/// ring's monomial order and never carry a zero coefficient.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        Self::term(ring, ring.one_monomial(), c)
    }

    pub fn from_i64(ring: &Ring, n: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(n))
    }

    pub fn term(ring: &Ring, mono: Monomial, c: Coeff) -> Self {
        assert_eq!(mono.nvars(), ring.nvars(), "exponent vector length");
        let terms = if c.is_zero() { Vec::new() } else { vec![(mono, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn var(ring: &Ring, name: &str) -> Result<Self, PolyError> {
        let i = ring.var_index(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Self::term(ring, Monomial::var(ring.nvars(), i, 1), ring.field().one()))
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges equal monomials, drops zeros.
    pub fn from_terms(ring: &Ring, mut terms: Vec<(Monomial, Coeff)>) -> Self {
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "exponent vector length");
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Constant coefficient (zero if absent).
    pub fn constant_coeff(&self) -> Coeff {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.ring.field().zero(),
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Largest exponent of the variable with the given index.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponents()[var]).max().unwrap_or(0)
    }

    fn check(&self, other: &Polynomial) {
        assert!(same_ring(&self.ring, &other.ring), "polynomials over different rings");
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        self.check(other);
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let sign = |c: &Coeff| if negate_other { c.neg() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), sign(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, true)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d.mul(c))).collect(),
        }
    }

    /// Multiplication by `c * mono`; monomial multiplication preserves the term order.
    pub fn mul_term(&self, mono: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.mul(mono), d.mul(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            acc = acc.add(&other.mul_term(m, c));
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Monic rescaling (zero stays zero).
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to variable `var_map[i]`.
    pub fn embed(&self, target: &Ring, var_map: &[usize]) -> Polynomial {
        assert_eq!(var_map.len(), self.ring.nvars());
        assert_eq!(target.field(), self.ring.field(), "coefficient field mismatch");
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = Monomial::one(n);
                for (i, &k) in m.exponents().iter().enumerate() {
                    e.0[var_map[i]] += k;
                }
                (e, c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Same polynomial viewed in another ring over the same variables (possibly another order).
    pub fn reorder(&self, target: &Ring) -> Polynomial {
        assert_eq!(target.vars(), self.ring.vars());
        Polynomial::from_terms(target, self.terms.clone())
    }

    /// Substitutes polynomials (over `target`) for each variable.
    pub fn substitute(&self, target: &Ring, values: &[Polynomial]) -> Polynomial {
        assert_eq!(values.len(), self.ring.nvars());
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &k) in m.exponents().iter().enumerate() {
                if k > 0 {
                    t = t.mul(&values[i].pow(k));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn parse(ring: &Ring, s: &str) -> Result<Polynomial, PolyError> {
        super::parse::parse_polynomial(ring, s)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

pub(crate) fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    vars: &[String],
    exps: impl Iterator<Item = i64>,
) -> fmt::Result {
    let mut first = true;
    for (v, e) in vars.iter().zip(exps) {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    /// Canonical form in the input grammar, e.g. `x^2*y - 3/2*z + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_display();
            let abs = if neg { c.neg() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, self.ring.vars(), m.exponents().iter().map(|&e| e as i64))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RingContext;

    #[test]
    fn arithmetic_and_display() {
        let r = RingContext::rational(&["x", "y", "z"]);
        let p = Polynomial::parse(&r, "x^2*y - 3/2*z + 1").unwrap();
        assert_eq!(p.to_string(), "x^2*y - 3/2*z + 1");
        let q = Polynomial::parse(&r, "x - y").unwrap();
        let s = &(&q * &q) - &Polynomial::parse(&r, "x^2 + y^2").unwrap();
        assert_eq!(s.to_string(), "-2*x*y");
        assert!((&p - &p).is_zero());
        assert_eq!(q.pow(3).to_string(), "x^3 - 3*x^2*y + 3*x*y^2 - y^3");
    }

    #[test]
    fn embed_into_larger_ring() {
        let r = RingContext::rational(&["x"]);
        let s = RingContext::rational(&["u", "x"]);
        let p = Polynomial::parse(&r, "x^2 + 1").unwrap();
        assert_eq!(p.embed(&s, &[1]).to_string(), "x^2 + 1");
    }
}
