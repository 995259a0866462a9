use std::cmp::Ordering;

use smallvec::SmallVec;

/// Exponent vector of a monomial; its length equals the number of ring variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub SmallVec<[u32; 6]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(nvars: usize, index: usize, power: u32) -> Self {
        let mut m = Self::one(nvars);
        m.0[index] = power;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Monomial orders; variable precedence follows the ring's variable list (first is largest).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    GrLex,
    #[default]
    GrevLex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::GrLex => a.degree().cmp(&b.degree()).then_with(|| a.0.cmp(&b.0)),
            MonomialOrder::GrevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.0.iter().zip(b.0.iter()).rev() {
                    if x != y {
                        // smaller exponent in the last differing variable wins
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::GrLex => "grlex",
            MonomialOrder::GrevLex => "grevlex",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "lex" => Some(MonomialOrder::Lex),
            "grlex" => Some(MonomialOrder::GrLex),
            "grevlex" => Some(MonomialOrder::GrevLex),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn orders_on_degree_two() {
        // x^2, xy, y^2, xz, yz, z^2 in three variables
        let xy = m(&[1, 1, 0]);
        let z2 = m(&[0, 0, 2]);
        let xz = m(&[1, 0, 1]);
        let y2 = m(&[0, 2, 0]);
        assert_eq!(MonomialOrder::Lex.cmp(&xz, &y2), Ordering::Greater);
        assert_eq!(MonomialOrder::GrLex.cmp(&xz, &y2), Ordering::Greater);
        // grevlex: y^2 > xz
        assert_eq!(MonomialOrder::GrevLex.cmp(&y2, &xz), Ordering::Greater);
        assert_eq!(MonomialOrder::GrevLex.cmp(&xy, &z2), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[0, 0, 5]), &m(&[0, 1, 0])), Ordering::Less);
    }

    #[test]
    fn divisibility() {
        assert!(m(&[1, 0]).divides(&m(&[2, 3])));
        assert!(!m(&[1, 4]).divides(&m(&[2, 3])));
        assert_eq!(m(&[1, 0]).quotient_of(&m(&[2, 3])), m(&[1, 3]));
        assert_eq!(m(&[1, 4]).lcm(&m(&[2, 3])), m(&[2, 4]));
        assert!(m(&[2, 0]).is_coprime(&m(&[0, 1])));
    }
}
