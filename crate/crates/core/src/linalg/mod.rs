//! Dense exact linear algebra over any [`Field`].
//!
//! Gaussian elimination always takes the first nonzero pivot in
//! (row, column) order, so every result (kernel bases in particular) is
//! deterministic.

mod sparse;

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::Field;

pub use sparse::SparseRows;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is not square: {0}x{1}")]
    NotSquare(usize, usize),
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(
    serialize = "F: Serialize + Clone",
    deserialize = "F: Deserialize<'de> + Field"
))]
#[serde(into = "MatrixRepr<F>", try_from = "MatrixRepr<F>")]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr<F> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
}

impl<F: Clone> From<Matrix<F>> for MatrixRepr<F> {
    fn from(m: Matrix<F>) -> Self {
        MatrixRepr {
            rows: m.rows,
            cols: m.cols,
            entries: m.data,
        }
    }
}

impl<F> TryFrom<MatrixRepr<F>> for Matrix<F> {
    type Error = String;
    fn try_from(r: MatrixRepr<F>) -> Result<Self, String> {
        if r.entries.len() != r.rows * r.cols {
            return Err(format!(
                "matrix {}x{} needs {} entries, got {}",
                r.rows,
                r.cols,
                r.rows * r.cols,
                r.entries.len()
            ));
        }
        Ok(Matrix {
            rows: r.rows,
            cols: r.cols,
            data: r.entries,
        })
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.data[r * self.cols..(r + 1) * self.cols]
                .iter()
                .map(|x| format!("{x:?}"))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Rref<F> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<F>) -> Result<Self, LinAlgError> {
        if data.len() != rows * cols {
            return Err(LinAlgError::DimensionMismatch {
                op: "from_row_major",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn column(v: Vec<F>) -> Self {
        Matrix {
            rows: v.len(),
            cols: 1,
            data: v,
        }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<F>]) -> Self {
        Matrix::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn into_column(self) -> Vec<F> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = self.get(r, c);
                    if r == c {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.mul_ref(s)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.same_shape(other, "add")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.same_shape(other, "sub")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        })
    }

    fn same_shape(&self, other: &Self, op: &'static str) -> Result<(), LinAlgError> {
        if self.shape() != other.shape() {
            return Err(LinAlgError::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch {
                op: "matmul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Matrix::<F>::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * other.cols + c;
                        out.data[idx] = out.data[idx].add_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `M v` for a plain vector.
    pub fn apply(&self, v: &[F]) -> Result<Vec<F>, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::DimensionMismatch {
                op: "apply",
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = F::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add_ref(&a.mul_ref(b));
                    }
                }
                acc
            })
            .collect())
    }

    /// Kronecker product, row-major blocks: entry `(i*rN + p, j*cN + q)` is
    /// `M[i,j] * N[p,q]`.
    pub fn kron(&self, other: &Self) -> Self {
        let (rn, cn) = other.shape();
        let mut out = Matrix::zeros(self.rows * rn, self.cols * cn);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for p in 0..rn {
                    for q in 0..cn {
                        let b = other.get(p, q);
                        if !b.is_zero() {
                            out.set(i * rn + p, j * cn + q, a.mul_ref(b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Result<F, LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::NotSquare(self.rows, self.cols));
        }
        Ok((0..self.rows).fold(F::zero(), |acc, i| acc.add_ref(self.get(i, i))))
    }

    pub fn hstack(&self, other: &Self) -> Result<Self, LinAlgError> {
        if self.rows != other.rows {
            return Err(LinAlgError::DimensionMismatch {
                op: "hstack",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(Matrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        }))
    }

    /// Stacks matrices with a common column count on top of each other.
    pub fn vstack_all(cols: usize, parts: &[Matrix<F>]) -> Result<Self, LinAlgError> {
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            if p.cols != cols {
                return Err(LinAlgError::DimensionMismatch {
                    op: "vstack",
                    left: (rows, cols),
                    right: p.shape(),
                });
            }
            rows += p.rows;
            data.extend(p.data.iter().cloned());
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let pivots = m.eliminate(true);
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.eliminate(false).len()
    }

    /// In-place elimination; with `full` the result is reduced (zeros above
    /// pivots as well). Returns pivot columns.
    fn eliminate(&mut self, full: bool) -> Vec<usize> {
        let (rows, cols) = self.shape();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..cols {
            if prow == rows {
                break;
            }
            let Some(r) = (prow..rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            if r != prow {
                for k in 0..cols {
                    self.data.swap(r * cols + k, prow * cols + k);
                }
            }
            let inv = self.get(prow, c).inv().expect("nonzero pivot");
            let mut support = Vec::new();
            for k in c..cols {
                let idx = prow * cols + k;
                if !self.data[idx].is_zero() {
                    self.data[idx] = self.data[idx].mul_ref(&inv);
                    support.push(k);
                }
            }
            let start = if full { 0 } else { prow + 1 };
            for r2 in start..rows {
                if r2 == prow {
                    continue;
                }
                let f = self.get(r2, c).clone();
                if f.is_zero() {
                    continue;
                }
                for &k in &support {
                    let (a, b) = (r2 * cols + k, prow * cols + k);
                    let pv = self.data[b].clone();
                    self.data[a].sub_mul_assign(&f, &pv);
                }
            }
            pivots.push(c);
            prow += 1;
        }
        pivots
    }

    /// Basis of the null space, one vector per free column, in column order.
    pub fn kernel_vectors(&self) -> Vec<Vec<F>> {
        let Rref { matrix, pivots } = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(r);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (r, &pc) in pivots.iter().enumerate() {
                let x = matrix.get(r, free);
                if !x.is_zero() {
                    v[pc] = -x.clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Kernel basis as column matrices.
    pub fn kernel_basis(&self) -> Vec<Matrix<F>> {
        self.kernel_vectors().into_iter().map(Matrix::column).collect()
    }

    /// One solution of `M x = b` (free variables set to zero), or `None` if
    /// the system is inconsistent. `b` may have several columns.
    pub fn solve(&self, b: &Self) -> Result<Option<Self>, LinAlgError> {
        if b.rows != self.rows {
            return Err(LinAlgError::DimensionMismatch {
                op: "solve",
                left: self.shape(),
                right: b.shape(),
            });
        }
        let aug = self.hstack(b)?;
        let Rref { matrix, pivots } = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.cols, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, matrix.get(r, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Option<Self>, LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::NotSquare(self.rows, self.cols));
        }
        if self.rank() < self.rows {
            return Ok(None);
        }
        self.solve(&Matrix::identity(self.rows))
    }
}

impl<F: Field> Mul for &Matrix<F> {
    type Output = Matrix<F>;

    /// Panics on a shape mismatch; use [`Matrix::matmul`] to handle it.
    fn mul(self, rhs: &Matrix<F>) -> Matrix<F> {
        self.matmul(rhs).expect("matrix product shape mismatch")
    }
}

/// Coordinates of `v` in the span of `basis` (columns), if it lies there.
pub fn coordinates<F: Field>(basis: &[Vec<F>], v: &[F]) -> Option<Vec<F>> {
    let n = v.len();
    if basis.is_empty() {
        return v.iter().all(|x| x.is_zero()).then(Vec::new);
    }
    let m = Matrix::from_columns(n, basis);
    m.solve(&Matrix::column(v.to_vec()))
        .expect("shapes agree")
        .map(|x| x.into_column())
}

/// Rank of a family of vectors of equal length `n`.
pub fn span_rank<F: Field>(n: usize, vectors: &[Vec<F>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_fn(vectors.len(), n, |r, c| vectors[r][c].clone()).rank()
}
