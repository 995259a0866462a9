use crate::poly::PolyMatrix;

use super::{MFMorphism, MatrixFactorization, MfError};

/// Finite complex of factorizations `E^0 -> E^1 -> ... -> E^k` over a common
/// `(ring, W, λ)`; `d^{i+1} ∘ d^i = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairComplex {
    objects: Vec<MatrixFactorization>,
    maps: Vec<MFMorphism>,
}

impl PairComplex {
    pub fn new(objects: Vec<MatrixFactorization>, maps: Vec<MFMorphism>) -> Result<Self, MfError> {
        if objects.is_empty() {
            return Err(MfError::InvalidComplex("a complex needs at least one object".into()));
        }
        if maps.len() + 1 != objects.len() {
            return Err(MfError::InvalidComplex(format!(
                "{} objects need {} maps, found {}",
                objects.len(),
                objects.len() - 1,
                maps.len()
            )));
        }
        for o in &objects[1..] {
            objects[0].check_context(o)?;
        }
        for (i, d) in maps.iter().enumerate() {
            if d.source() != &objects[i] || d.target() != &objects[i + 1] {
                return Err(MfError::InvalidComplex(format!("map {i} does not go from object {i} to object {}", i + 1)));
            }
        }
        for i in 1..maps.len() {
            if !maps[i].compose(&maps[i - 1])?.is_zero() {
                return Err(MfError::CompositionNonzero(i - 1));
            }
        }
        Ok(PairComplex { objects, maps })
    }

    pub fn objects(&self) -> &[MatrixFactorization] {
        &self.objects
    }

    pub fn maps(&self) -> &[MFMorphism] {
        &self.maps
    }

    /// Totalization with `T1 = ⊕_{k+m odd} E_k^m`, `T0 = ⊕_{k+m even} E_k^m`
    /// and odd map `d^m_k + (-1)^m e_k` on the summand `E_k^m`.
    /// Summands are listed by increasing `m`.
    pub fn totalize(&self) -> Result<MatrixFactorization, MfError> {
        let first = &self.objects[0];
        let ring = first.ring();
        // offsets[m] = position of E^m's summand inside T1 and inside T0
        let mut off1 = Vec::with_capacity(self.objects.len());
        let mut off0 = Vec::with_capacity(self.objects.len());
        let (mut n1, mut n0) = (0, 0);
        for o in &self.objects {
            off1.push(n1);
            off0.push(n0);
            n1 += o.rank();
            n0 += o.rank();
        }
        let mut t1 = PolyMatrix::zero(ring, n0, n1);
        let mut t0 = PolyMatrix::zero(ring, n1, n0);

        let put = |dst: &mut PolyMatrix, r0: usize, c0: usize, m: &PolyMatrix, negate: bool| {
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    let v = if negate { m.get(i, j).neg() } else { m.get(i, j).clone() };
                    dst.set(r0 + i, c0 + j, v);
                }
            }
        };

        for (m, obj) in self.objects.iter().enumerate() {
            let sign_neg = m % 2 == 1;
            // E_k^m sits in T_{(k+m) mod 2}; e_k flips k, d^m raises m
            for k in 0..2usize {
                let parity = (k + m) % 2;
                let e_k = if k == 1 { obj.e1() } else { obj.e0() };
                let src = if parity == 1 { off1[m] } else { off0[m] };
                let dst = if parity == 1 { off0[m] } else { off1[m] };
                let target = if parity == 1 { &mut t1 } else { &mut t0 };
                put(target, dst, src, e_k, sign_neg);
                if let Some(d) = self.maps.get(m) {
                    let d_k = if k == 1 { d.p1() } else { d.p0() };
                    let dst = if parity == 1 { off0[m + 1] } else { off1[m + 1] };
                    put(target, dst, src, d_k, false);
                }
            }
        }
        MatrixFactorization::new(ring, first.w().clone(), first.lambda().clone(), t1, t0)
    }
}
