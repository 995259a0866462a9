use std::sync::Arc;

use super::{Field, Monomial, MonomialOrder, PolyError};

/// A polynomial ring `k[x_1, ..., x_n]` with a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    vars: Vec<String>,
    field: Field,
    order: MonomialOrder,
}

/// Shared handle to a ring context.
pub type Ring = Arc<RingContext>;

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingContext {
    pub fn new<S: AsRef<str>>(
        vars: &[S],
        field: Field,
        order: MonomialOrder,
    ) -> Result<Ring, PolyError> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(PolyError::InvalidVariable(v.clone()));
            }
            if vars[..i].contains(v) {
                return Err(PolyError::DuplicateVariable(v.clone()));
            }
        }
        if let Field::Prime(p) = field {
            Field::prime(p)?;
        }
        Ok(Arc::new(RingContext { vars, field, order }))
    }

    /// Rational grevlex ring; panics on invalid names, intended for literals.
    pub fn rational(vars: &[&str]) -> Ring {
        Self::new(vars, Field::Rational, MonomialOrder::GrevLex).expect("valid variable names")
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Arc::new(RingContext { vars: self.vars.clone(), field: self.field, order })
    }

    pub fn with_field(&self, field: Field) -> Ring {
        Arc::new(RingContext { vars: self.vars.clone(), field, order: self.order })
    }

    /// Ring on `self.vars ++ extra`, same field and order.
    pub fn extend<S: AsRef<str>>(&self, extra: &[S]) -> Result<Ring, PolyError> {
        let mut vars = self.vars.clone();
        vars.extend(extra.iter().map(|s| s.as_ref().to_string()));
        RingContext::new(&vars, self.field, self.order)
    }
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_names() {
        assert!(matches!(
            RingContext::new(&["x", "x"], Field::Rational, MonomialOrder::Lex),
            Err(PolyError::DuplicateVariable(_))
        ));
        assert!(RingContext::new(&[""], Field::Rational, MonomialOrder::Lex).is_err());
        assert!(RingContext::new(&["2x"], Field::Rational, MonomialOrder::Lex).is_err());
        assert!(RingContext::new(&["x"], Field::Prime(9), MonomialOrder::Lex).is_err());
    }

    #[test]
    fn extension_keeps_order() {
        let r = RingContext::rational(&["x"]);
        let s = r.extend(&["u", "v"]).unwrap();
        assert_eq!(s.vars(), &["x", "u", "v"]);
        assert!(r.extend(&["x"]).is_err());
    }
}
