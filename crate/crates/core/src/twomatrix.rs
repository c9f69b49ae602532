//! Linear functors between 2-vector spaces as matrices of vector spaces.
//!
//! A functor `Vect^m -> Vect^n` is an `n x m` table of dimensions. Every
//! entry carries its standard basis, so natural transformations are tables
//! of ordinary matrices. The entry `(i,j)` of a composite `G o F` is
//! `(+)_k G[i][k] (x) F[k][j]`, with summands ordered by `k` and each tensor
//! factor ordered row-major (`G` factor major).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::Field;
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwoMatError {
    #[error("shape mismatch in {op}")]
    Shape { op: &'static str },
    #[error("functor is not an endofunctor ({0} -> {1})")]
    NotSquare(usize, usize),
    #[error("natural transformation does not start at the identity functor")]
    NotTrace,
    #[error("block ({0},{1}) has the wrong shape")]
    BlockShape(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VectMatrix {
    pub m_src: usize,
    pub m_dst: usize,
    /// `m_dst x m_src`.
    pub dims: Vec<Vec<usize>>,
}

impl VectMatrix {
    pub fn new(m_src: usize, m_dst: usize, dims: Vec<Vec<usize>>) -> Result<Self, TwoMatError> {
        if dims.len() != m_dst || dims.iter().any(|r| r.len() != m_src) {
            return Err(TwoMatError::Shape { op: "new" });
        }
        Ok(VectMatrix { m_src, m_dst, dims })
    }

    /// Square table; panics on ragged input.
    pub fn square(dims: Vec<Vec<usize>>) -> Self {
        let m = dims.len();
        Self::new(m, m, dims).expect("square dims table")
    }

    pub fn identity(m: usize) -> Self {
        Self::square((0..m).map(|i| (0..m).map(|j| usize::from(i == j)).collect()).collect())
    }

    /// `dims[i][j] = [i = perm[j]]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let m = perm.len();
        Self::square((0..m).map(|i| (0..m).map(|j| usize::from(perm[j] == i)).collect()).collect())
    }

    pub fn dim(&self, i: usize, j: usize) -> usize {
        self.dims[i][j]
    }

    pub fn is_square(&self) -> bool {
        self.m_src == self.m_dst
    }

    /// `self o f`.
    pub fn compose(&self, f: &VectMatrix) -> Result<VectMatrix, TwoMatError> {
        if f.m_dst != self.m_src {
            return Err(TwoMatError::Shape { op: "compose" });
        }
        let dims = (0..self.m_dst)
            .map(|i| {
                (0..f.m_src)
                    .map(|j| (0..self.m_src).map(|k| self.dims[i][k] * f.dims[k][j]).sum())
                    .collect()
            })
            .collect();
        Ok(VectMatrix {
            m_src: f.m_src,
            m_dst: self.m_dst,
            dims,
        })
    }

    /// Kronecker product; the pair `(i, p)` has index `i * n + p`.
    pub fn boxed(&self, h: &VectMatrix) -> VectMatrix {
        let dims = (0..self.m_dst * h.m_dst)
            .map(|r| {
                (0..self.m_src * h.m_src)
                    .map(|c| self.dims[r / h.m_dst][c / h.m_src] * h.dims[r % h.m_dst][c % h.m_src])
                    .collect()
            })
            .collect();
        VectMatrix {
            m_src: self.m_src * h.m_src,
            m_dst: self.m_dst * h.m_dst,
            dims,
        }
    }

    pub fn ttr(&self) -> Result<TraceSpace, TwoMatError> {
        if !self.is_square() {
            return Err(TwoMatError::NotSquare(self.m_src, self.m_dst));
        }
        let summands: Vec<usize> = (0..self.m_src).map(|i| self.dims[i][i]).collect();
        Ok(TraceSpace {
            functor: self.clone(),
            total_dim: summands.iter().sum(),
            summands,
        })
    }
}

/// `ttr(F) = (+)_i F[i][i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceSpace {
    pub functor: VectMatrix,
    pub summands: Vec<usize>,
    pub total_dim: usize,
}

impl TraceSpace {
    /// Offset of summand `i` in the flattened trace space.
    pub fn offset(&self, i: usize) -> usize {
        self.summands[..i].iter().sum()
    }
}

/// A natural transformation between functors of equal shape.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "F: Serialize + Clone", deserialize = "F: Deserialize<'de> + Field"))]
pub struct TwoNat<F> {
    pub source: VectMatrix,
    pub target: VectMatrix,
    /// Row-major over `(i, j)`, block `(i,j)` is `target[i][j] x source[i][j]`.
    pub blocks: Vec<Matrix<F>>,
}

impl<F: Field> TwoNat<F> {
    pub fn new(
        source: VectMatrix,
        target: VectMatrix,
        blocks: Vec<Matrix<F>>,
    ) -> Result<Self, TwoMatError> {
        let n = TwoNat {
            source,
            target,
            blocks,
        };
        n.check()?;
        Ok(n)
    }

    pub fn check(&self) -> Result<(), TwoMatError> {
        let (s, t) = (&self.source, &self.target);
        if s.m_src != t.m_src || s.m_dst != t.m_dst || self.blocks.len() != s.m_src * s.m_dst {
            return Err(TwoMatError::Shape { op: "natural transformation" });
        }
        for i in 0..s.m_dst {
            for j in 0..s.m_src {
                if self.block(i, j).shape() != (t.dims[i][j], s.dims[i][j]) {
                    return Err(TwoMatError::BlockShape(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn from_fn(
        source: VectMatrix,
        target: VectMatrix,
        mut f: impl FnMut(usize, usize) -> Matrix<F>,
    ) -> Result<Self, TwoMatError> {
        let mut blocks = Vec::new();
        for i in 0..source.m_dst {
            for j in 0..source.m_src {
                blocks.push(f(i, j));
            }
        }
        Self::new(source, target, blocks)
    }

    pub fn identity(f: &VectMatrix) -> Self {
        Self::from_fn(f.clone(), f.clone(), |i, j| Matrix::identity(f.dims[i][j])).expect("identity")
    }

    pub fn zero(source: &VectMatrix, target: &VectMatrix) -> Result<Self, TwoMatError> {
        Self::from_fn(source.clone(), target.clone(), |i, j| {
            Matrix::zeros(target.dims[i][j], source.dims[i][j])
        })
    }

    pub fn block(&self, i: usize, j: usize) -> &Matrix<F> {
        &self.blocks[i * self.source.m_src + j]
    }

    /// `self o_1 phi`: blockwise matrix product.
    pub fn vcompose(&self, phi: &TwoNat<F>) -> Result<Self, TwoMatError> {
        if phi.target != self.source {
            return Err(TwoMatError::Shape { op: "vcompose" });
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&phi.blocks)
            .map(|(a, b)| a * b)
            .collect();
        Self::new(phi.source.clone(), self.target.clone(), blocks)
    }

    /// Horizontal composite of `self: G => G'` and `eta: F => F'`, a
    /// transformation `G o F => G' o F'`.
    pub fn hcompose(&self, eta: &TwoNat<F>) -> Result<Self, TwoMatError> {
        let (g, g2, f, f2) = (&self.source, &self.target, &eta.source, &eta.target);
        let src = g.compose(f)?;
        let dst = g2.compose(f2)?;
        Self::from_fn(src.clone(), dst.clone(), |i, j| {
            let mut out = Matrix::zeros(dst.dims[i][j], src.dims[i][j]);
            let (mut ro, mut co) = (0, 0);
            for k in 0..g.m_src {
                let piece = self.block(i, k).kron(eta.block(k, j));
                for r in 0..piece.rows() {
                    for c in 0..piece.cols() {
                        out.set(ro + r, co + c, piece.get(r, c).clone());
                    }
                }
                ro += g2.dims[i][k] * f2.dims[k][j];
                co += g.dims[i][k] * f.dims[k][j];
            }
            out
        })
    }

    /// External product: block `((i,p),(j,q))` is the Kronecker product of
    /// block `(i,j)` of `self` with block `(p,q)` of `eta`.
    pub fn boxed(&self, eta: &TwoNat<F>) -> Self {
        let src = self.source.boxed(&eta.source);
        let dst = self.target.boxed(&eta.target);
        let (n_dst, n_src) = (eta.source.m_dst, eta.source.m_src);
        Self::from_fn(src, dst, |r, c| {
            self.block(r / n_dst, c / n_src).kron(eta.block(r % n_dst, c % n_src))
        })
        .expect("boxed shapes")
    }

    /// Whether the source is an identity functor, i.e. `self` lies in `ttr(target)`.
    pub fn is_trace_element(&self) -> bool {
        self.source.is_square() && self.source == VectMatrix::identity(self.source.m_src)
    }

    /// Coordinates in `ttr(target)`: the diagonal columns stacked in order.
    pub fn trace_vector(&self) -> Result<Vec<F>, TwoMatError> {
        if !self.is_trace_element() {
            return Err(TwoMatError::NotTrace);
        }
        Ok((0..self.source.m_src)
            .flat_map(|i| self.block(i, i).col(0))
            .collect())
    }

    /// The trace element of `f` with the given flattened coordinates.
    pub fn trace_element(f: &VectMatrix, coords: &[F]) -> Result<Self, TwoMatError> {
        let t = f.ttr()?;
        if coords.len() != t.total_dim {
            return Err(TwoMatError::Shape { op: "trace_element" });
        }
        let id = VectMatrix::identity(f.m_src);
        Self::from_fn(id, f.clone(), |i, j| {
            if i == j {
                let o = t.offset(i);
                Matrix::column(coords[o..o + t.summands[i]].to_vec())
            } else {
                Matrix::zeros(f.dims[i][j], 0)
            }
        })
    }
}

/// `mu: ttr(F) x ttr(H) -> ttr(F box H)`.
pub fn mu<F: Field>(xi: &TwoNat<F>, zeta: &TwoNat<F>) -> Result<TwoNat<F>, TwoMatError> {
    if !xi.is_trace_element() || !zeta.is_trace_element() {
        return Err(TwoMatError::NotTrace);
    }
    Ok(xi.boxed(zeta))
}

/// Applies `mu` to all pairs of standard basis vectors and reports whether
/// the images form a basis of `ttr(F box H)`.
pub fn mu_is_basis_bijective<F: Field>(f: &VectMatrix, h: &VectMatrix) -> Result<bool, TwoMatError> {
    let (tf, th) = (f.ttr()?, h.ttr()?);
    let tb = f.boxed(h).ttr()?;
    let unit = |n: usize, k: usize| (0..n).map(|i| if i == k { F::one() } else { F::zero() }).collect::<Vec<F>>();
    let mut images = Vec::new();
    for a in 0..tf.total_dim {
        let xi = TwoNat::trace_element(f, &unit(tf.total_dim, a))?;
        for b in 0..th.total_dim {
            let zeta = TwoNat::trace_element(h, &unit(th.total_dim, b))?;
            images.push(mu(&xi, &zeta)?.trace_vector()?);
        }
    }
    Ok(images.len() == tb.total_dim && crate::linalg::span_rank(tb.total_dim, &images) == tb.total_dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    #[test]
    fn compose_upper_triangular() {
        let f = VectMatrix::square(vec![vec![1, 1], vec![0, 1]]);
        assert_eq!(f.compose(&f).unwrap().dims, vec![vec![1, 2], vec![0, 1]]);
        assert_eq!(VectMatrix::identity(2).compose(&f).unwrap(), f);
    }

    #[test]
    fn ttr_and_box() {
        let f = VectMatrix::square(vec![vec![1, 1], vec![0, 1]]);
        let h = VectMatrix::square(vec![vec![2]]);
        assert_eq!(f.ttr().unwrap().total_dim, 2);
        assert_eq!(f.boxed(&h).ttr().unwrap().total_dim, 4);
        assert_eq!(VectMatrix::identity(3).ttr().unwrap().total_dim, 3);
        assert!(mu_is_basis_bijective::<Rational>(&f, &h).unwrap());
        assert!(VectMatrix::new(2, 1, vec![vec![1, 1]]).unwrap().ttr().is_err());
    }

    #[test]
    fn identity_nat_composites() {
        let f = VectMatrix::square(vec![vec![1, 2], vec![0, 1]]);
        let id = TwoNat::<Rational>::identity(&f);
        let both = id.hcompose(&id).unwrap();
        assert_eq!(both, TwoNat::identity(&f.compose(&f).unwrap()));
        assert_eq!(id.vcompose(&id).unwrap(), id);
    }
}
