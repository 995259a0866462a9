use std::fmt;

use super::ring::same_ring;
use super::{PolyError, Polynomial, Ring};

/// Dense rectangular matrix of polynomials over a single ring, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> Self {
        PolyMatrix { ring: ring.clone(), rows, cols, entries: vec![Polynomial::zero(ring); rows * cols] }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        Self::scalar(ring, n, &Polynomial::one(ring))
    }

    /// `p * Id_n`.
    pub fn scalar(ring: &Ring, n: usize, p: &Polynomial) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, p.clone());
        }
        m
    }

    pub fn from_entries(
        ring: &Ring,
        rows: usize,
        cols: usize,
        entries: Vec<Polynomial>,
    ) -> Result<Self, PolyError> {
        if entries.len() != rows * cols {
            return Err(PolyError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|e| !same_ring(e.ring(), ring)) {
            return Err(PolyError::RingMismatch);
        }
        Ok(PolyMatrix { ring: ring.clone(), rows, cols, entries })
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Polynomial>>) -> Result<Self, PolyError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(PolyError::Shape("ragged rows".into()));
        }
        Self::from_entries(ring, nrows, ncols, rows.into_iter().flatten().collect())
    }

    /// Parses a matrix given as rows of polynomial strings.
    pub fn parse<S: AsRef<str>>(ring: &Ring, rows: &[Vec<S>]) -> Result<Self, PolyError> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| Polynomial::parse(ring, s.as_ref())).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        Self::from_rows(ring, parsed)
    }

    /// Single-column matrix.
    pub fn column(ring: &Ring, v: Vec<Polynomial>) -> Result<Self, PolyError> {
        let n = v.len();
        Self::from_entries(ring, n, 1, v)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        debug_assert!(same_ring(p.ring(), &self.ring));
        self.entries[i * self.cols + j] = p;
    }

    pub fn row_vec(&self, i: usize) -> Vec<Polynomial> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial>> {
        (0..self.cols).map(|j| self.col_vec(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Polynomial>> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(PolyError::RingMismatch);
        }
        if self.cols != other.rows {
            return Err(PolyError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PolyMatrix::zero(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.entries[idx] = out.entries[idx].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>, PolyError> {
        if v.len() != self.cols {
            return Err(PolyError::Shape(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|i| {
                (0..self.cols).fold(Polynomial::zero(&self.ring), |acc, j| {
                    let a = self.get(i, j);
                    if a.is_zero() || v[j].is_zero() {
                        acc
                    } else {
                        acc.add(&a.mul(&v[j]))
                    }
                })
            })
            .collect())
    }

    fn zip_with(
        &self,
        other: &PolyMatrix,
        f: impl Fn(&Polynomial, &Polynomial) -> Polynomial,
    ) -> Result<PolyMatrix, PolyError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(PolyError::RingMismatch);
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(PolyError::Shape("matrix shapes differ".into()));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect();
        Ok(PolyMatrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, entries })
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        self.zip_with(other, Polynomial::add)
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        self.zip_with(other, Polynomial::sub)
    }

    pub fn neg(&self) -> PolyMatrix {
        self.map(Polynomial::neg)
    }

    pub fn scale(&self, p: &Polynomial) -> PolyMatrix {
        self.map(|e| e.mul(p))
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> PolyMatrix {
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Entrywise change of ring (see [`Polynomial::embed`]).
    pub fn embed(&self, target: &Ring, var_map: &[usize]) -> PolyMatrix {
        PolyMatrix {
            ring: target.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.embed(target, var_map)).collect(),
        }
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zero(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Assembles a block matrix. Every block row must share a height and every
    /// block column a width.
    pub fn block(ring: &Ring, blocks: &[Vec<&PolyMatrix>]) -> Result<PolyMatrix, PolyError> {
        let heights: Vec<usize> = blocks.iter().map(|r| r.first().map_or(0, |b| b.rows)).collect();
        let widths: Vec<usize> = blocks.first().map_or(Vec::new(), |r| r.iter().map(|b| b.cols).collect());
        for row in blocks {
            if row.len() != widths.len() {
                return Err(PolyError::Shape("ragged block rows".into()));
            }
        }
        let mut out = PolyMatrix::zero(ring, heights.iter().sum(), widths.iter().sum());
        let mut r0 = 0;
        for (bi, row) in blocks.iter().enumerate() {
            let mut c0 = 0;
            for (bj, b) in row.iter().enumerate() {
                if b.rows != heights[bi] || b.cols != widths[bj] {
                    return Err(PolyError::Shape(format!(
                        "block ({bi},{bj}) is {}x{}, expected {}x{}",
                        b.rows, b.cols, heights[bi], widths[bj]
                    )));
                }
                if !same_ring(&b.ring, ring) {
                    return Err(PolyError::RingMismatch);
                }
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        out.set(r0 + i, c0 + j, b.get(i, j).clone());
                    }
                }
                c0 += widths[bj];
            }
            r0 += heights[bi];
        }
        Ok(out)
    }

    /// Kronecker product; row index `(i, k)` maps to `i * other.rows + k`.
    pub fn kron(&self, other: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(PolyError::RingMismatch);
        }
        let mut out = PolyMatrix::zero(&self.ring, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a.mul(other.get(k, l)));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn max_degree(&self) -> u32 {
        self.entries.iter().filter_map(Polynomial::total_degree).max().unwrap_or(0)
    }

    /// Rows of polynomial strings, the serialized form used in files.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.to_rows().iter().map(|r| r.iter().map(|p| p.to_string()).collect()).collect()
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.to_strings();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            write!(f, "[")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{c:>width$}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RingContext;

    #[test]
    fn product_and_blocks() {
        let r = RingContext::rational(&["x", "y"]);
        let a = PolyMatrix::parse(&r, &[vec!["x", "y"], vec!["-y", "x"]]).unwrap();
        let b = PolyMatrix::parse(&r, &[vec!["x", "-y"], vec!["y", "x"]]).unwrap();
        let p = a.mul(&b).unwrap();
        let w = Polynomial::parse(&r, "x^2 + y^2").unwrap();
        assert_eq!(p, PolyMatrix::scalar(&r, 2, &w));
        let z = PolyMatrix::zero(&r, 2, 2);
        let blk = PolyMatrix::block(&r, &[vec![&a, &z], vec![&z, &b]]).unwrap();
        assert_eq!((blk.rows(), blk.cols()), (4, 4));
        assert_eq!(blk.get(3, 2).to_string(), "y");
        assert!(PolyMatrix::block(&r, &[vec![&a], vec![&PolyMatrix::zero(&r, 1, 3)]]).is_err());
    }

    #[test]
    fn kronecker_layout() {
        let r = RingContext::rational(&["x"]);
        let i2 = PolyMatrix::identity(&r, 2);
        let x = PolyMatrix::parse(&r, &[vec!["x"]]).unwrap();
        assert_eq!(i2.kron(&x).unwrap(), PolyMatrix::scalar(&r, 2, &Polynomial::var(&r, "x").unwrap()));
        assert!(x.mul(&i2).is_err());
    }
}
