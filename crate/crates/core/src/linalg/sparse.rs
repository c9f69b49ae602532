use std::collections::BTreeMap;

use crate::field::Field;

use super::Matrix;

/// Row-sparse matrix: each row is a list of `(column, value)` pairs sorted
/// by column with no zero values.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseRows<F> {
    ncols: usize,
    rows: Vec<Vec<(usize, F)>>,
}

impl<F: Field> SparseRows<F> {
    pub fn new(ncols: usize) -> Self {
        SparseRows {
            ncols,
            rows: Vec::new(),
        }
    }

    /// Appends a row given as unsorted `(column, value)` pairs; duplicate
    /// columns are summed and zeros dropped.
    pub fn push_row(&mut self, mut entries: Vec<(usize, F)>) {
        entries.sort_by_key(|e| e.0);
        let mut row: Vec<(usize, F)> = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            assert!(c < self.ncols, "column {c} out of range {}", self.ncols);
            match row.last_mut() {
                Some((lc, lv)) if *lc == c => *lv = lv.add_ref(&v),
                _ => row.push((c, v)),
            }
        }
        row.retain(|(_, v)| !v.is_zero());
        self.rows.push(row);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, r: usize) -> &[(usize, F)] {
        &self.rows[r]
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn to_dense(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.rows.len(), self.ncols);
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                m.set(r, *c, v.clone());
            }
        }
        m
    }

    /// `self * rhs`.
    pub fn matmul(&self, rhs: &SparseRows<F>) -> SparseRows<F> {
        assert_eq!(self.ncols, rhs.nrows(), "sparse product shape mismatch");
        let mut out = SparseRows::new(rhs.ncols);
        for row in &self.rows {
            let mut acc: BTreeMap<usize, F> = BTreeMap::new();
            for (k, a) in row {
                for (c, b) in &rhs.rows[*k] {
                    let e = acc.entry(*c).or_insert_with(F::zero);
                    *e = e.add_ref(&a.mul_ref(b));
                }
            }
            out.push_row(acc.into_iter().collect());
        }
        out
    }

    /// `self * v` for a dense column matrix whose columns are basis vectors.
    pub fn apply_dense(&self, m: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.ncols, m.rows(), "sparse-dense product shape mismatch");
        let mut out = Matrix::zeros(self.rows.len(), m.cols());
        for (r, row) in self.rows.iter().enumerate() {
            for j in 0..m.cols() {
                let mut acc = F::zero();
                for (k, a) in row {
                    let b = m.get(*k, j);
                    if !b.is_zero() {
                        acc = acc.add_ref(&a.mul_ref(b));
                    }
                }
                out.set(r, j, acc);
            }
        }
        out
    }

    /// Exact rank by incremental sparse echelon reduction.
    pub fn rank(&self) -> usize {
        let mut pivots: BTreeMap<usize, Vec<(usize, F)>> = BTreeMap::new();
        for row in &self.rows {
            let mut cur = row.clone();
            while let Some((lead, lv)) = cur.first().cloned() {
                match pivots.get(&lead) {
                    Some(p) => cur = axpy(&cur, &lv, p),
                    None => {
                        let inv = lv.inv().expect("nonzero lead");
                        let normalized = cur.into_iter().map(|(c, v)| (c, v.mul_ref(&inv))).collect();
                        pivots.insert(lead, normalized);
                        break;
                    }
                }
            }
        }
        pivots.len()
    }
}

/// `x - f * p` for sorted sparse vectors.
fn axpy<F: Field>(x: &[(usize, F)], f: &F, p: &[(usize, F)]) -> Vec<(usize, F)> {
    let mut out = Vec::with_capacity(x.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < p.len() {
        let take_x = j == p.len() || (i < x.len() && x[i].0 < p[j].0);
        let take_p = i == x.len() || (j < p.len() && p[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_p {
            out.push((p[j].0, -f.mul_ref(&p[j].1)));
            j += 1;
        } else {
            let mut v = x[i].1.clone();
            v.sub_mul_assign(f, &p[j].1);
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn r(x: i64) -> Rational {
        Rational::from_int(x)
    }

    #[test]
    fn rank_matches_dense() {
        let mut s = SparseRows::new(4);
        s.push_row(vec![(0, r(1)), (2, r(2))]);
        s.push_row(vec![(2, r(4)), (0, r(2))]);
        s.push_row(vec![(1, r(1)), (3, r(-1))]);
        s.push_row(vec![(3, r(1)), (3, r(-1))]);
        assert_eq!(s.rank(), 2);
        assert_eq!(s.to_dense().rank(), 2);
        assert!(s.row(3).is_empty());
    }

    #[test]
    fn product_agrees_with_dense() {
        let mut a = SparseRows::new(2);
        a.push_row(vec![(0, r(1)), (1, r(2))]);
        a.push_row(vec![(1, r(3))]);
        let mut b = SparseRows::new(3);
        b.push_row(vec![(2, r(1))]);
        b.push_row(vec![(0, r(-1)), (2, r(5))]);
        let p = a.matmul(&b);
        assert_eq!(p.to_dense(), &a.to_dense() * &b.to_dense());
        assert_eq!(a.apply_dense(&b.to_dense()), p.to_dense());
    }
}
