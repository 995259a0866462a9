//! Parser for the textual polynomial grammar:
//! terms joined by `+`/`-`, each term a product (`*`) of coefficients
//! (`3`, `3/2`) and powers (`x`, `x^4`). Whitespace is ignored.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Monomial, PolyError, Polynomial, Ring};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>) -> PolyError {
        PolyError::Parse { column: self.pos + 1, message: message.into() }
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse as integer"))
    }

    fn ident(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier")
    }
}

pub(crate) fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial, PolyError> {
    let field = ring.field();
    let mut lx = Lexer { src: text.as_bytes(), pos: 0 };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let negative = match lx.peek() {
            Some(b'+') => {
                lx.pos += 1;
                false
            }
            Some(b'-') => {
                lx.pos += 1;
                true
            }
            None if first => return Err(lx.err("empty polynomial")),
            None => break,
            Some(_) if first => false,
            Some(c) => return Err(lx.err(format!("expected '+' or '-', found '{}'", c as char))),
        };
        first = false;

        let mut coeff = BigRational::from_integer(BigInt::from(if negative { -1 } else { 1 }));
        let mut mono = Monomial::one(ring.nvars());
        loop {
            match lx.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = lx.integer()?;
                    let mut value = BigRational::from_integer(num);
                    if lx.peek() == Some(b'/') {
                        lx.pos += 1;
                        let den = lx.integer()?;
                        if den.is_zero() {
                            return Err(lx.err("zero denominator"));
                        }
                        value /= BigRational::from_integer(den);
                    }
                    coeff *= value;
                }
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let col = lx.pos + 1;
                    let name = lx.ident();
                    let idx = ring.var_index(name).ok_or_else(|| PolyError::Parse {
                        column: col,
                        message: format!("unknown variable '{name}'"),
                    })?;
                    let mut power = 1u32;
                    if lx.peek() == Some(b'^') {
                        lx.pos += 1;
                        let e = lx.integer()?;
                        power = u32::try_from(e).map_err(|_| lx.err("exponent out of range"))?;
                    }
                    mono.0[idx] += power;
                }
                _ => return Err(lx.err("expected coefficient or variable")),
            }
            if lx.peek() == Some(b'*') {
                lx.pos += 1;
            } else {
                break;
            }
        }
        let c = field
            .from_rational(&coeff)
            .ok_or_else(|| lx.err(format!("coefficient {coeff} undefined in {field}")))?;
        terms.push((mono, c));
    }
    Ok(Polynomial::from_terms(ring, terms))
}
