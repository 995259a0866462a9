use std::fmt;

use crate::poly::{same_ring, Coeff, Dim, PolyMatrix, Polynomial, Ring};

use super::MfError;

/// A pair `E1 --e1--> E0 --e0--> E1` of free modules of equal rank with
/// `e0 e1 = e1 e0 = (W - λ) Id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFactorization {
    ring: Ring,
    w: Polynomial,
    lambda: Coeff,
    e1: PolyMatrix,
    e0: PolyMatrix,
}

/// One cell of a composition that differs from `(W - λ) Id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellFailure {
    pub product: &'static str,
    pub row: usize,
    pub col: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub shape_errors: Vec<String>,
    pub failures: Vec<CellFailure>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.shape_errors.is_empty() && self.failures.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        let mut parts: Vec<String> = self.shape_errors.clone();
        parts.extend(self.failures.iter().map(|c| {
            format!("{}[{},{}] = {} (expected {})", c.product, c.row, c.col, c.found, c.expected)
        }));
        write!(f, "{}", parts.join("; "))
    }
}

fn check_products(
    report: &mut ValidationReport,
    name: &'static str,
    product: &PolyMatrix,
    diag: &Polynomial,
) {
    for i in 0..product.rows() {
        for j in 0..product.cols() {
            let zero;
            let expected = if i == j {
                diag
            } else {
                zero = Polynomial::zero(product.ring());
                &zero
            };
            let found = product.get(i, j);
            if found != expected {
                report.failures.push(CellFailure {
                    product: name,
                    row: i,
                    col: j,
                    expected: expected.to_string(),
                    found: found.to_string(),
                });
            }
        }
    }
}

/// Validation of raw data, without constructing the object.
pub fn validate_parts(
    ring: &Ring,
    w: &Polynomial,
    lambda: &Coeff,
    e1: &PolyMatrix,
    e0: &PolyMatrix,
) -> ValidationReport {
    let mut report = ValidationReport::default();
    if !same_ring(w.ring(), ring) || !same_ring(e1.ring(), ring) || !same_ring(e0.ring(), ring) {
        report.shape_errors.push("components live in different rings".into());
        return report;
    }
    if lambda.field() != ring.field() {
        report.shape_errors.push("critical value outside the coefficient field".into());
        return report;
    }
    let fiber = w.sub(&Polynomial::constant(ring, lambda.clone()));
    if fiber.is_zero() {
        report.shape_errors.push("W - lambda is the zero polynomial".into());
    }
    if !e1.is_square() || !e0.is_square() || e1.rows() != e0.rows() {
        report.shape_errors.push(format!(
            "e1 is {}x{} and e0 is {}x{}; both must be r x r with equal r",
            e1.rows(),
            e1.cols(),
            e0.rows(),
            e0.cols()
        ));
        return report;
    }
    let p01 = e0.mul(e1).expect("square matrices of equal size");
    let p10 = e1.mul(e0).expect("square matrices of equal size");
    check_products(&mut report, "e0*e1", &p01, &fiber);
    check_products(&mut report, "e1*e0", &p10, &fiber);
    report
}

impl MatrixFactorization {
    pub fn new(ring: &Ring, w: Polynomial, lambda: Coeff, e1: PolyMatrix, e0: PolyMatrix) -> Result<Self, MfError> {
        let report = validate_parts(ring, &w, &lambda, &e1, &e0);
        if !report.is_valid() {
            return Err(MfError::NotAFactorization(report));
        }
        Ok(MatrixFactorization { ring: ring.clone(), w, lambda, e1, e0 })
    }

    /// Rank-one factorization `(e1, e0)` over λ = 0, parsed from strings.
    pub fn rank_one(ring: &Ring, w: &str, e1: &str, e0: &str) -> Result<Self, MfError> {
        let w = Polynomial::parse(ring, w)?;
        let e1 = PolyMatrix::parse(ring, &[vec![e1]])?;
        let e0 = PolyMatrix::parse(ring, &[vec![e0]])?;
        Self::new(ring, w, ring.field().zero(), e1, e0)
    }

    /// The rank-zero object over `(W, λ)`.
    pub fn zero_object(ring: &Ring, w: Polynomial, lambda: Coeff) -> Result<Self, MfError> {
        Self::new(ring, w, lambda, PolyMatrix::zero(ring, 0, 0), PolyMatrix::zero(ring, 0, 0))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn w(&self) -> &Polynomial {
        &self.w
    }

    pub fn lambda(&self) -> &Coeff {
        &self.lambda
    }

    pub fn rank(&self) -> usize {
        self.e1.rows()
    }

    /// `e1 : E1 -> E0`.
    pub fn e1(&self) -> &PolyMatrix {
        &self.e1
    }

    /// `e0 : E0 -> E1`.
    pub fn e0(&self) -> &PolyMatrix {
        &self.e0
    }

    /// `W - λ`.
    pub fn fiber_polynomial(&self) -> Polynomial {
        self.w.sub(&Polynomial::constant(&self.ring, self.lambda.clone()))
    }

    pub fn validate(&self) -> ValidationReport {
        validate_parts(&self.ring, &self.w, &self.lambda, &self.e1, &self.e0)
    }

    pub fn same_context(&self, other: &MatrixFactorization) -> bool {
        same_ring(&self.ring, &other.ring) && self.w == other.w && self.lambda == other.lambda
    }

    pub(crate) fn check_context(&self, other: &MatrixFactorization) -> Result<(), MfError> {
        if self.same_context(other) {
            Ok(())
        } else {
            Err(MfError::ContextMismatch)
        }
    }

    /// `E[1] = (E0 ⇄ E1)` with maps `(-e0, -e1)`.
    pub fn shift(&self) -> MatrixFactorization {
        MatrixFactorization {
            ring: self.ring.clone(),
            w: self.w.clone(),
            lambda: self.lambda.clone(),
            e1: self.e0.neg(),
            e0: self.e1.neg(),
        }
    }

    pub fn shift_by(&self, n: usize) -> MatrixFactorization {
        if n.is_multiple_of(2) {
            self.clone()
        } else {
            self.shift()
        }
    }

    pub fn direct_sum(&self, other: &MatrixFactorization) -> Result<MatrixFactorization, MfError> {
        self.check_context(other)?;
        let r = &self.ring;
        let z = PolyMatrix::zero(r, self.rank(), other.rank());
        let zt = PolyMatrix::zero(r, other.rank(), self.rank());
        let e1 = PolyMatrix::block(r, &[vec![&self.e1, &z], vec![&zt, &other.e1]])?;
        let e0 = PolyMatrix::block(r, &[vec![&self.e0, &z], vec![&zt, &other.e0]])?;
        Self::new(r, self.w.clone(), self.lambda.clone(), e1, e0)
    }

    /// Graded tensor product over the union of the variable sets.
    ///
    /// `T1 = E1⊗F0 ⊕ E0⊗F1`, `T0 = E0⊗F0 ⊕ E1⊗F1`, and the odd map is
    /// `e ⊗ 1 + σ ⊗ f` with `σ` the parity involution (`+1` on `E0`, `-1` on `E1`):
    ///
    /// ```text
    /// t1 = [[ e1⊗1,  1⊗f1 ],      t0 = [[ e0⊗1, -1⊗f1 ],
    ///       [-1⊗f0,  e0⊗1 ]]            [ 1⊗f0,  e1⊗1 ]]
    /// ```
    pub fn tensor(&self, other: &MatrixFactorization) -> Result<MatrixFactorization, MfError> {
        if self.ring.field() != other.ring.field() {
            return Err(MfError::ContextMismatch);
        }
        if let Some(v) = other.ring.vars().iter().find(|v| self.ring.var_index(v).is_some()) {
            return Err(MfError::VariableCollision(v.clone()));
        }
        let ring = self.ring.extend(other.ring.vars())?;
        let na = self.ring.nvars();
        let map_a: Vec<usize> = (0..na).collect();
        let map_b: Vec<usize> = (0..other.ring.nvars()).map(|i| na + i).collect();

        let (e1, e0) = (self.e1.embed(&ring, &map_a), self.e0.embed(&ring, &map_a));
        let (f1, f0) = (other.e1.embed(&ring, &map_b), other.e0.embed(&ring, &map_b));
        let ia = PolyMatrix::identity(&ring, self.rank());
        let ib = PolyMatrix::identity(&ring, other.rank());

        let e1_i = e1.kron(&ib)?;
        let e0_i = e0.kron(&ib)?;
        let i_f1 = ia.kron(&f1)?;
        let i_f0 = ia.kron(&f0)?;
        let t1 = PolyMatrix::block(&ring, &[vec![&e1_i, &i_f1], vec![&i_f0.neg(), &e0_i]])?;
        let t0 = PolyMatrix::block(&ring, &[vec![&e0_i, &i_f1.neg()], vec![&i_f0, &e1_i]])?;

        let w = self.w.embed(&ring, &map_a).add(&other.w.embed(&ring, &map_b));
        let lambda = self.lambda.add(&other.lambda);
        Self::new(&ring, w, lambda, t1, t0)
    }

    /// Tensor with the rank-one factorization `(u, v)` of `uv` in two fresh variables.
    pub fn knorrer(&self) -> Result<MatrixFactorization, MfError> {
        self.knorrer_with("u", "v")
    }

    pub fn knorrer_with(&self, u: &str, v: &str) -> Result<MatrixFactorization, MfError> {
        for name in [u, v] {
            if self.ring.var_index(name).is_some() {
                return Err(MfError::VariableCollision(name.to_string()));
            }
        }
        let extra = crate::poly::RingContext::new(&[u, v], self.ring.field(), self.ring.order())?;
        let uv = format!("{u}*{v}");
        let pair = MatrixFactorization::rank_one(&extra, &uv, u, v)?;
        self.tensor(&pair)
    }

    /// Presentation of `Coker e1` as a module over `A / (W - λ)`.
    pub fn cokernel_presentation(&self) -> ModulePresentation {
        let fiber = self.fiber_polynomial();
        let r = self.rank();
        let scalar = PolyMatrix::scalar(&self.ring, r, &fiber);
        let presentation =
            PolyMatrix::block(&self.ring, &[vec![&self.e1, &scalar]]).unwrap_or_else(|_| PolyMatrix::zero(&self.ring, 0, 0));
        ModulePresentation { ring: self.ring.clone(), fiber_relation: fiber, presentation }
    }
}

/// Finitely presented module `A^r / (columns of presentation)`, killed by the
/// fiber relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    pub ring: Ring,
    pub fiber_relation: Polynomial,
    pub presentation: PolyMatrix,
}

impl ModulePresentation {
    pub fn rank(&self) -> usize {
        self.presentation.rows()
    }

    fn basis(&self) -> crate::poly::GroebnerBasis {
        crate::poly::module_groebner(&self.presentation.columns(), self.rank(), &self.ring)
            .expect("columns have the ambient length")
    }

    /// Whether `(W - λ) Id` lies in the column module.
    pub fn is_killed_by_fiber(&self) -> bool {
        let gb = self.basis();
        (0..self.rank()).all(|i| {
            let mut v = vec![Polynomial::zero(&self.ring); self.rank()];
            v[i] = self.fiber_relation.clone();
            crate::poly::submodule_membership(&v, &gb).expect("matching length")
        })
    }

    pub fn dimension(&self) -> Dim {
        crate::poly::quotient_dim(&self.basis())
    }

    /// Number of standard monomials in each total degree `0..=max_degree`.
    pub fn hilbert_slices(&self, max_degree: u32) -> Vec<usize> {
        self.basis().hilbert_slices(max_degree)
    }
}
