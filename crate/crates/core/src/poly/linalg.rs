//! Sparse row echelon over a coefficient field. Used by the degree-truncation
//! oracles, which deliberately avoid the Gröbner machinery.

use std::collections::BTreeMap;

use super::Coeff;

/// Incremental row echelon form; rows are sparse `(column, value)` lists.
#[derive(Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, Vec<(usize, Coeff)>>,
}

fn normalize(mut row: Vec<(usize, Coeff)>) -> Vec<(usize, Coeff)> {
    row.sort_by_key(|(c, _)| *c);
    let mut out: Vec<(usize, Coeff)> = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv = lv.add(&v),
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

fn axpy(row: &[(usize, Coeff)], pivot: &[(usize, Coeff)], factor: &Coeff) -> Vec<(usize, Coeff)> {
    // row - factor * pivot
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |t| t.0);
        let cj = pivot.get(j).map_or(usize::MAX, |t| t.0);
        if ci < cj {
            out.push(row[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, pivot[j].1.mul(factor).neg()));
            j += 1;
        } else {
            let v = row[i].1.sub(&pivot[j].1.mul(factor));
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a row; returns true if it increased the rank.
    pub fn insert(&mut self, row: Vec<(usize, Coeff)>) -> bool {
        let mut row = normalize(row);
        while let Some((c, v)) = row.first().cloned() {
            match self.pivots.get(&c) {
                Some(p) => row = axpy(&row, p, &v),
                None => {
                    let inv = v.inv().expect("nonzero pivot");
                    let row = row.into_iter().map(|(c, x)| (c, x.mul(&inv))).collect();
                    self.pivots.insert(c, row);
                    return true;
                }
            }
        }
        false
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Rank of a matrix given as sparse rows.
pub fn rank(rows: impl IntoIterator<Item = Vec<(usize, Coeff)>>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    #[test]
    fn small_ranks() {
        let f = Field::Rational;
        let c = |n| f.from_i64(n);
        let rows = vec![
            vec![(0, c(1)), (1, c(2))],
            vec![(0, c(2)), (1, c(4))],
            vec![(2, c(3))],
        ];
        assert_eq!(rank(rows), 2);
        let g = Field::Prime(5);
        let rows = vec![vec![(0, g.from_i64(1)), (1, g.from_i64(2))], vec![(0, g.from_i64(3)), (1, g.from_i64(1))]];
        // det = 1 - 6 = -5 = 0 mod 5
        assert_eq!(rank(rows), 1);
    }
}
