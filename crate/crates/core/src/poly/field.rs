//! Exact coefficient fields: the rationals and prime fields `F_p`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::PolyError;

/// The coefficient field of a ring context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    /// Prime field; the modulus is kept below 2^32 so products fit in a `u64`.
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self, PolyError> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(PolyError::InvalidField(format!("{p} is not a prime below 2^32")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> Coeff {
        match *self {
            Field::Rational => Coeff::Q(BigRational::zero()),
            Field::Prime(p) => Coeff::P { v: 0, p },
        }
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match *self {
            Field::Rational => Coeff::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Coeff::P { v: n.rem_euclid(p as i64) as u64, p },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match *self {
            Field::Rational => Coeff::Q(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Coeff::P { v: r.to_u64().unwrap_or(0), p }
            }
        }
    }

    /// Image of a rational number; `None` when the denominator vanishes in the field.
    pub fn from_rational(&self, q: &BigRational) -> Option<Coeff> {
        match *self {
            Field::Rational => Some(Coeff::Q(q.clone())),
            Field::Prime(_) => {
                let num = self.from_bigint(q.numer());
                let den = self.from_bigint(q.denom());
                den.inv().map(|d| num.mul(&d))
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = PolyError;

    /// Accepts `Q` or `Fp:<p>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" || s == "QQ" {
            return Ok(Field::Rational);
        }
        if let Some(rest) = s.strip_prefix("Fp:") {
            let p: u64 = rest
                .trim()
                .parse()
                .map_err(|_| PolyError::InvalidField(s.to_string()))?;
            return Field::prime(p);
        }
        Err(PolyError::InvalidField(s.to_string()))
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. Prime-field elements carry their modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(BigRational),
    P { v: u64, p: u64 },
}

fn mod_inv(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        return None;
    }
    // a^(p-2) mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    Some(acc)
}

impl Coeff {
    pub fn field(&self) -> Field {
        match self {
            Coeff::Q(_) => Field::Rational,
            Coeff::P { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_zero(),
            Coeff::P { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_one(),
            Coeff::P { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a + b),
            (Coeff::P { v: a, p }, Coeff::P { v: b, p: q }) if p == q => {
                Coeff::P { v: (a + b) % p, p: *p }
            }
            _ => panic!("coefficient field mismatch"),
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a * b),
            (Coeff::P { v: a, p }, Coeff::P { v: b, p: q }) if p == q => {
                Coeff::P { v: a * b % p, p: *p }
            }
            _ => panic!("coefficient field mismatch"),
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Q(a) => Coeff::Q(-a),
            Coeff::P { v, p } => Coeff::P { v: (p - v) % p, p: *p },
        }
    }

    pub fn inv(&self) -> Option<Coeff> {
        match self {
            Coeff::Q(a) if a.is_zero() => None,
            Coeff::Q(a) => Some(Coeff::Q(a.recip())),
            Coeff::P { v, p } => mod_inv(*v, *p).map(|v| Coeff::P { v, p: *p }),
        }
    }

    /// Panics on division by zero.
    pub fn div(&self, other: &Coeff) -> Coeff {
        self.mul(&other.inv().expect("division by zero coefficient"))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Coeff::Q(q) => Some(q),
            Coeff::P { .. } => None,
        }
    }

    /// Whether the printed form starts with a minus sign.
    pub(crate) fn is_negative_display(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_negative(),
            Coeff::P { v, p } => *v > p / 2,
        }
    }
}

impl fmt::Display for Coeff {
    /// Rationals print as `a` or `a/b`; prime-field elements print as the
    /// representative of least absolute value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Q(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Coeff::P { v, p } => {
                if *v > p / 2 {
                    write!(f, "-{}", p - v)
                } else {
                    write!(f, "{v}")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_fields() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("Fp:32749".parse::<Field>().unwrap(), Field::Prime(32749));
        assert!("Fp:32767".parse::<Field>().is_err());
        assert!("R".parse::<Field>().is_err());
    }

    #[test]
    fn prime_arithmetic() {
        let f = Field::Prime(7);
        let a = f.from_i64(3);
        let b = f.from_i64(-2);
        assert_eq!(a.add(&b), f.from_i64(1));
        assert_eq!(a.mul(&a.inv().unwrap()), f.one());
        assert_eq!(b.to_string(), "-2");
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn rational_images() {
        let q = BigRational::new(BigInt::from(3), BigInt::from(2));
        assert_eq!(Field::Rational.from_rational(&q).unwrap().to_string(), "3/2");
        let c = Field::Prime(7).from_rational(&q).unwrap();
        assert_eq!(c.mul(&Field::Prime(7).from_i64(2)), Field::Prime(7).from_i64(3));
        let bad = BigRational::new(BigInt::from(1), BigInt::from(7));
        assert!(Field::Prime(7).from_rational(&bad).is_none());
    }
}
