//! Dense univariate polynomials over ℚ, lowest coefficient first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::Polynomial;

pub(crate) type Dense = Vec<BigRational>;

pub(crate) fn trim(mut f: Dense) -> Dense {
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    f
}

/// Coefficients of a polynomial that involves only variable `var`.
pub(crate) fn from_polynomial(p: &Polynomial, var: usize) -> Dense {
    let mut out = vec![BigRational::zero(); p.degree_in(var) as usize + 1];
    for (m, c) in p.terms() {
        let q = c.as_rational().expect("rational coefficients");
        out[m.exponents()[var] as usize] += q;
    }
    trim(out)
}

pub(crate) fn degree(f: &Dense) -> Option<usize> {
    f.len().checked_sub(1)
}

pub(crate) fn eval(f: &Dense, x: &BigRational) -> BigRational {
    f.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

pub(crate) fn derivative(f: &Dense) -> Dense {
    trim(f.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(BigInt::from(i))).collect())
}

fn rem(a: &Dense, b: &Dense) -> Dense {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db {
        let k = r.len() - 1 - db;
        let factor = r.last().expect("nonempty") / &lead;
        for (i, c) in b.iter().enumerate() {
            r[k + i] -= &factor * c;
        }
        r.pop();
        r = trim(r);
    }
    r
}

/// Monic gcd; the zero polynomial if both inputs vanish.
pub(crate) fn gcd(a: &Dense, b: &Dense) -> Dense {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    match a.last().cloned() {
        Some(l) => a.into_iter().map(|c| c / &l).collect(),
        None => a,
    }
}

/// Degree of the squarefree part.
pub(crate) fn squarefree_degree(f: &Dense) -> usize {
    let d = degree(f).unwrap_or(0);
    if d == 0 {
        return 0;
    }
    d - degree(&gcd(f, &derivative(f))).unwrap_or(0)
}

pub(crate) fn is_squarefree(f: &Dense) -> bool {
    degree(&gcd(f, &derivative(f))).unwrap_or(0) == 0
}

/// Divides out the largest power of the variable.
pub(crate) fn strip_zero_roots(f: &Dense) -> Dense {
    let k = f.iter().take_while(|c| c.is_zero()).count();
    f[k.min(f.len())..].to_vec()
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Positive divisors of `n`, or `None` when `n` is too large to factor by trial division.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut n = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = 2u64;
    while p <= TRIAL_LIMIT && BigInt::from(p) * BigInt::from(p) <= n {
        let bp = BigInt::from(p);
        let mut k = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            k += 1;
        }
        if k > 0 {
            primes.push((bp, k));
        }
        p += 1;
    }
    if n > BigInt::one() {
        if BigInt::from(TRIAL_LIMIT) * BigInt::from(TRIAL_LIMIT) < n {
            return None;
        }
        primes.push((n, 1));
    }
    let mut out = vec![BigInt::one()];
    for (q, k) in primes {
        let mut next = Vec::with_capacity(out.len() * (k as usize + 1));
        for d in &out {
            let mut x = d.clone();
            for _ in 0..=k {
                next.push(x.clone());
                x *= &q;
            }
        }
        out = next;
    }
    Some(out)
}

/// Distinct rational roots in increasing order, or `None` if the coefficients
/// are too large for the candidate search.
pub(crate) fn rational_roots(f: &Dense) -> Option<Vec<BigRational>> {
    let f = trim(f.clone());
    if f.is_empty() {
        return Some(Vec::new());
    }
    let mut roots = Vec::new();
    let g = strip_zero_roots(&f);
    if g.len() < f.len() {
        roots.push(BigRational::zero());
    }
    if g.len() > 1 {
        let lcm = g.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = g.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let num = divisors(&ints[0])?;
        let den = divisors(ints.last().expect("nonempty"))?;
        let mut seen = std::collections::BTreeSet::new();
        for p in &num {
            for q in &den {
                for s in [p.clone(), -p.clone()] {
                    let x = BigRational::new(s, q.clone());
                    if seen.insert(x.clone()) && eval(&g, &x).is_zero() {
                        roots.push(x);
                    }
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn dense(c: &[i64]) -> Dense {
        c.iter().map(|&n| q(n)).collect()
    }

    #[test]
    fn gcd_and_squarefree() {
        // (w-1)^2 (w+2) = w^3 - 3w + 2
        let f = dense(&[2, -3, 0, 1]);
        assert_eq!(gcd(&f, &derivative(&f)), dense(&[-1, 1]));
        assert!(!is_squarefree(&f));
        assert_eq!(squarefree_degree(&f), 2);
        assert!(is_squarefree(&dense(&[-4, 0, 1])));
    }

    #[test]
    fn roots() {
        assert_eq!(rational_roots(&dense(&[-4, 0, 1])), Some(vec![q(-2), q(2)]));
        assert_eq!(rational_roots(&dense(&[0, -1, 0, 1])), Some(vec![q(-1), q(0), q(1)]));
        assert_eq!(rational_roots(&dense(&[-2, 0, 1])), Some(vec![]));
        let half = vec![BigRational::new(BigInt::from(-1), BigInt::from(4)), q(0), q(1)];
        assert_eq!(rational_roots(&half).unwrap().len(), 2);
    }

    #[test]
    fn zero_roots_are_stripped() {
        assert_eq!(strip_zero_roots(&dense(&[0, 0, -1, 1])), dense(&[-1, 1]));
    }
}
