use crate::poly::{PolyMatrix, Ring};

use super::{MatrixFactorization, MfError};

/// Closed degree-zero morphism `(p1 : E1 -> F1, p0 : E0 -> F0)` with
/// `p1 e0 = f0 p0` and `f1 p1 = p0 e1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MFMorphism {
    source: MatrixFactorization,
    target: MatrixFactorization,
    p1: PolyMatrix,
    p0: PolyMatrix,
}

impl MFMorphism {
    pub fn new(
        source: &MatrixFactorization,
        target: &MatrixFactorization,
        p1: PolyMatrix,
        p0: PolyMatrix,
    ) -> Result<Self, MfError> {
        source.check_context(target)?;
        let (re, rf) = (source.rank(), target.rank());
        for (name, m) in [("p1", &p1), ("p0", &p0)] {
            if m.rows() != rf || m.cols() != re {
                return Err(MfError::InvalidMorphism(format!(
                    "{name} is {}x{}, expected {rf}x{re}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let lhs = p1.mul(source.e0())?;
        let rhs = target.e0().mul(&p0)?;
        if lhs != rhs {
            return Err(MfError::InvalidMorphism("p1*e0 != f0*p0".into()));
        }
        let lhs = target.e1().mul(&p1)?;
        let rhs = p0.mul(source.e1())?;
        if lhs != rhs {
            return Err(MfError::InvalidMorphism("f1*p1 != p0*e1".into()));
        }
        Ok(MFMorphism { source: source.clone(), target: target.clone(), p1, p0 })
    }

    pub fn identity(e: &MatrixFactorization) -> Self {
        let id = PolyMatrix::identity(e.ring(), e.rank());
        MFMorphism { source: e.clone(), target: e.clone(), p1: id.clone(), p0: id }
    }

    pub fn zero(source: &MatrixFactorization, target: &MatrixFactorization) -> Result<Self, MfError> {
        source.check_context(target)?;
        let z = PolyMatrix::zero(source.ring(), target.rank(), source.rank());
        Ok(MFMorphism { source: source.clone(), target: target.clone(), p1: z.clone(), p0: z })
    }

    pub fn source(&self) -> &MatrixFactorization {
        &self.source
    }

    pub fn target(&self) -> &MatrixFactorization {
        &self.target
    }

    pub fn p1(&self) -> &PolyMatrix {
        &self.p1
    }

    pub fn p0(&self) -> &PolyMatrix {
        &self.p0
    }

    pub fn ring(&self) -> &Ring {
        self.source.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.p1.is_zero() && self.p0.is_zero()
    }

    /// `p[1] = (p0, p1)` as a morphism `E[1] -> F[1]`.
    pub fn shift(&self) -> MFMorphism {
        MFMorphism {
            source: self.source.shift(),
            target: self.target.shift(),
            p1: self.p0.clone(),
            p0: self.p1.clone(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MFMorphism) -> Result<MFMorphism, MfError> {
        if other.target != self.source {
            return Err(MfError::InvalidMorphism("composition of non-adjacent morphisms".into()));
        }
        Ok(MFMorphism {
            source: other.source.clone(),
            target: self.target.clone(),
            p1: self.p1.mul(&other.p1)?,
            p0: self.p0.mul(&other.p0)?,
        })
    }

    /// Same underlying maps with a polynomial factor.
    pub fn scale(&self, factor: &crate::poly::Polynomial) -> MFMorphism {
        MFMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            p1: self.p1.scale(factor),
            p0: self.p0.scale(factor),
        }
    }

    pub fn sub(&self, other: &MFMorphism) -> Result<MFMorphism, MfError> {
        if self.source != other.source || self.target != other.target {
            return Err(MfError::ContextMismatch);
        }
        Ok(MFMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            p1: self.p1.sub(&other.p1)?,
            p0: self.p0.sub(&other.p0)?,
        })
    }

    /// Mapping cone on `F1 ⊕ E0 ⇄ F0 ⊕ E1` with
    /// `c0 = [[f0, p1], [0, -e1]]` and `c1 = [[f1, p0], [0, -e0]]`,
    /// plus the structure maps `q = (id, 0) : F -> Cone(p)` and
    /// `r = (0, -id) : Cone(p) -> E[1]`.
    pub fn cone(&self) -> Result<Cone, MfError> {
        let (e, f) = (&self.source, &self.target);
        let ring = e.ring();
        let (re, rf) = (e.rank(), f.rank());
        let z_fe = PolyMatrix::zero(ring, re, rf);
        let c1 = PolyMatrix::block(ring, &[vec![f.e1(), &self.p0], vec![&z_fe, &e.e0().neg()]])?;
        let c0 = PolyMatrix::block(ring, &[vec![f.e0(), &self.p1], vec![&z_fe, &e.e1().neg()]])?;
        let object = MatrixFactorization::new(ring, e.w().clone(), e.lambda().clone(), c1, c0)?;

        let incl = PolyMatrix::block(ring, &[vec![&PolyMatrix::identity(ring, rf)], vec![&PolyMatrix::zero(ring, re, rf)]])?;
        let inclusion = MFMorphism::new(f, &object, incl.clone(), incl)?;
        let proj = PolyMatrix::block(
            ring,
            &[vec![&PolyMatrix::zero(ring, re, rf), &PolyMatrix::identity(ring, re).neg()]],
        )?;
        let projection = MFMorphism::new(&object, &e.shift(), proj.clone(), proj)?;
        Ok(Cone { object, inclusion, projection })
    }
}

/// Cone object with its exact-triangle structure maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    pub object: MatrixFactorization,
    pub inclusion: MFMorphism,
    pub projection: MFMorphism,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mf::corpus;
    use crate::poly::Polynomial;

    #[test]
    fn morphism_equations_are_checked() {
        let a = corpus::a_n(1, 1);
        let r = a.ring().clone();
        let x = PolyMatrix::parse(&r, &[vec!["x"]]).unwrap();
        let one = PolyMatrix::identity(&r, 1);
        assert!(MFMorphism::new(&a, &a, x.clone(), x.clone()).is_ok());
        assert!(MFMorphism::new(&a, &a, x, one).is_err());
    }

    #[test]
    fn shift_of_morphism_swaps_components() {
        let a = corpus::a_n(2, 1);
        let b = corpus::a_n(2, 2);
        let r = a.ring().clone();
        // (1, x) : (x, x^2) -> (x^2, x)
        let p = MFMorphism::new(&a, &b, PolyMatrix::identity(&r, 1), PolyMatrix::parse(&r, &[vec!["x"]]).unwrap()).unwrap();
        let s = p.shift();
        assert_eq!(s.p1(), p.p0());
        assert_eq!(s.p0(), p.p1());
        assert!(MFMorphism::new(s.source(), s.target(), s.p1().clone(), s.p0().clone()).is_ok());
        assert_eq!(s.shift(), p);
    }

    #[test]
    fn cone_of_zero_is_direct_sum_with_shift() {
        let e = corpus::a_n(3, 1);
        let f = corpus::a_n(3, 2);
        let c = MFMorphism::zero(&e, &f).unwrap().cone().unwrap();
        assert_eq!(c.object, f.direct_sum(&e.shift()).unwrap());
    }

    #[test]
    fn cone_blocks_and_structure_maps() {
        let e = corpus::a_n(1, 1);
        let id = MFMorphism::identity(&e);
        let c = id.cone().unwrap();
        assert_eq!(c.object.rank(), 2);
        assert_eq!(c.object.e0().to_strings(), vec![vec!["x", "1"], vec!["0", "-x"]]);
        assert_eq!(c.inclusion.source(), &e);
        assert_eq!(c.projection.target(), &e.shift());

        let x = Polynomial::var(e.ring(), "x").unwrap();
        let px = id.scale(&x);
        assert!(MFMorphism::new(&e, &e, px.p1().clone(), px.p0().clone()).is_ok());
        assert!(px.cone().unwrap().object.validate().is_valid());
    }
}
