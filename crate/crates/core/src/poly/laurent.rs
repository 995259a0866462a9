use std::collections::BTreeMap;
use std::fmt;

use super::polynomial::write_monomial;
use super::{Coeff, Monomial, Polynomial, Ring};

/// Laurent polynomial: integer exponent vectors with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPolynomial {
    ring: Ring,
    terms: BTreeMap<Vec<i64>, Coeff>,
}

impl LaurentPolynomial {
    pub fn zero(ring: &Ring) -> Self {
        LaurentPolynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Vec<i64>, Coeff)>) -> Self {
        let mut out = Self::zero(ring);
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn add_term(&mut self, exps: Vec<i64>, c: Coeff) {
        assert_eq!(exps.len(), self.ring.nvars());
        let entry = self.terms.entry(exps).or_insert_with(|| self.ring.field().zero());
        *entry = entry.add(&c);
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Coeff)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Smallest monomial `Y^d` (d ≥ 0) such that `Y^d · self` is a polynomial.
    pub fn denominator_exponents(&self) -> Vec<u32> {
        let n = self.ring.nvars();
        (0..n)
            .map(|i| self.terms.keys().map(|e| (-e[i]).max(0)).max().unwrap_or(0) as u32)
            .collect()
    }

    /// `(N, d)` with `self = N / Y^d` and `d` minimal.
    pub fn numerator_denominator(&self) -> (Polynomial, Monomial) {
        let d = self.denominator_exponents();
        (self.times_monomial_to_poly(&d), Monomial::from_exponents(&d))
    }

    /// `Y^shift · self` as a polynomial; panics if a negative exponent remains.
    pub fn times_monomial_to_poly(&self, shift: &[u32]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let exps: Vec<u32> = e
                    .iter()
                    .zip(shift)
                    .map(|(a, &s)| u32::try_from(a + s as i64).expect("exponent cleared"))
                    .collect();
                (Monomial::from_exponents(&exps), c.clone())
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// The logarithmic derivative `Y_i ∂W/∂Y_i`, which keeps every exponent.
    pub fn euler_derivative(&self, var: usize) -> LaurentPolynomial {
        let field = self.ring.field();
        LaurentPolynomial::from_terms(
            &self.ring,
            self.terms.iter().map(|(e, c)| (e.clone(), c.mul(&field.from_i64(e[var])))),
        )
    }
}

/// Writes `c * Y^a / Y^b` in the `q/(Y1*Y2)` style shared by Laurent displays.
pub(crate) fn write_laurent_term(
    f: &mut fmt::Formatter<'_>,
    vars: &[String],
    coeff: &str,
    exps: &[i64],
) -> fmt::Result {
    let pos: Vec<i64> = exps.iter().map(|&e| e.max(0)).collect();
    let neg: Vec<i64> = exps.iter().map(|&e| (-e).max(0)).collect();
    let has_pos = pos.iter().any(|&e| e > 0);
    let neg_count = neg.iter().filter(|&&e| e > 0).count();
    let neg_single_power = neg_count == 1 && neg.iter().all(|&e| e <= 1);
    match (coeff, has_pos) {
        ("1", true) => write_monomial(f, vars, pos.iter().copied())?,
        ("1", false) => write!(f, "1")?,
        (c, true) => {
            write!(f, "{c}*")?;
            write_monomial(f, vars, pos.iter().copied())?
        }
        (c, false) => write!(f, "{c}")?,
    }
    if neg_count > 0 {
        write!(f, "/")?;
        if neg_single_power {
            write_monomial(f, vars, neg.iter().copied())?;
        } else {
            write!(f, "(")?;
            write_monomial(f, vars, neg.iter().copied())?;
            write!(f, ")")?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative_display();
            let abs = if neg { c.neg() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            write_laurent_term(f, self.ring.vars(), &abs.to_string(), e)?;
        }
        Ok(())
    }
}
