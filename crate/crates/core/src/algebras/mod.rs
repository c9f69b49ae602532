//! Finite-dimensional associative algebras given by structure constants,
//! their bimodules, group actions, crossed products and module categories.

mod action;
mod bimodule;
pub mod fixtures;
mod modules;

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cocycles::{CocycleError, Cocycle};
use crate::field::{Cyclotomic, Field};
use crate::groups::FiniteGroup;
use crate::linalg::{LinAlgError, Matrix};

pub use action::{
    center_decomposition, crossed_product, trivial_action_candidates, CandidateReport,
    ActionJson, CenterDecomposition, ClassSummand, GroupAction,
};
pub use bimodule::{
    bimodule_center, equivariant_trace_action, kunneth_center, twisted_bimodule, Bimodule,
    EquivariantBimodule, KunnethCenterReport, TraceActionReport,
};
pub use modules::{
    induction_adjunction_check, module_hom_dim, AdjunctionReport, LeftModule,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("associativity fails at (e{0} e{1}) e{2}")]
    NonAssociative(usize, usize, usize),
    #[error("unit law fails at e{0}")]
    Unit(usize),
    #[error("action of {0} is not a unital algebra automorphism")]
    NotAutomorphism(usize),
    #[error("action is not multiplicative at ({0}, {1})")]
    NotAction(usize, usize),
    #[error("module law fails: {0}")]
    ModuleLaw(String),
    #[error("equivariance data invalid: {0}")]
    Compatibility(String),
    #[error("subspace not preserved: {0}")]
    NotClosed(String),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
}

/// Sparse structure constants: `e_i e_j = sum_k c_k e_k` stored as the
/// list of nonzero `(k, c_k)`.
type Products<F> = Vec<Vec<(usize, F)>>;

/// An associative unital algebra with basis `e_0 .. e_{d-1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "F: Serialize + Field", deserialize = "F: Deserialize<'de> + Field"))]
#[serde(into = "AlgebraJson<F>", try_from = "AlgebraJson<F>")]
pub struct StructAlgebra<F> {
    dim: usize,
    products: Products<F>,
    unit: Vec<F>,
}

/// Wire form with the dense `d x d x d` tensor.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraJson<F> {
    pub dim: usize,
    pub sc: Vec<Vec<Vec<F>>>,
    pub unit: Vec<F>,
}

impl<F: Field> From<StructAlgebra<F>> for AlgebraJson<F> {
    fn from(a: StructAlgebra<F>) -> Self {
        let d = a.dim;
        let sc = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let mut v = vec![F::zero(); d];
                        for (k, c) in a.product(i, j) {
                            v[*k] = c.clone();
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        AlgebraJson {
            dim: d,
            sc,
            unit: a.unit,
        }
    }
}

impl<F: Field> TryFrom<AlgebraJson<F>> for StructAlgebra<F> {
    type Error = AlgebraError;
    fn try_from(j: AlgebraJson<F>) -> Result<Self, AlgebraError> {
        StructAlgebra::new(j.dim, j.sc, j.unit)
    }
}

impl<F: Field> StructAlgebra<F> {
    /// Validates associativity and the unit.
    pub fn new(dim: usize, sc: Vec<Vec<Vec<F>>>, unit: Vec<F>) -> Result<Self, AlgebraError> {
        if sc.len() != dim
            || sc.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim))
        {
            return Err(AlgebraError::Shape(format!("structure constants must be {dim}^3")));
        }
        let products = sc
            .into_iter()
            .flatten()
            .map(|v| {
                v.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect();
        Self::from_products(dim, products, unit)
    }

    /// Builds from a closure giving the sparse product of basis elements.
    pub fn from_fn(
        dim: usize,
        unit: Vec<F>,
        mut f: impl FnMut(usize, usize) -> Vec<(usize, F)>,
    ) -> Result<Self, AlgebraError> {
        let mut products = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let mut v = f(i, j);
                v.sort_by_key(|e| e.0);
                let mut merged: Vec<(usize, F)> = Vec::with_capacity(v.len());
                for (k, c) in v {
                    match merged.last_mut() {
                        Some((lk, lc)) if *lk == k => *lc = lc.add_ref(&c),
                        _ => merged.push((k, c)),
                    }
                }
                merged.retain(|(_, c)| !c.is_zero());
                products.push(merged);
            }
        }
        Self::from_products(dim, products, unit)
    }

    fn from_products(dim: usize, products: Products<F>, unit: Vec<F>) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::Shape("algebra of dimension 0".into()));
        }
        if unit.len() != dim {
            return Err(AlgebraError::Shape(format!("unit has length {}, expected {dim}", unit.len())));
        }
        if products.iter().flatten().any(|(k, _)| *k >= dim) {
            return Err(AlgebraError::Shape("structure constant index out of range".into()));
        }
        let a = StructAlgebra {
            dim,
            products,
            unit,
        };
        a.check()?;
        Ok(a)
    }

    /// Associativity on all basis triples, then the two unit laws.
    pub fn check(&self) -> Result<(), AlgebraError> {
        if let Some((i, j, k)) = self.associativity_violation() {
            return Err(AlgebraError::NonAssociative(i, j, k));
        }
        for i in 0..self.dim {
            let e = self.basis_vector(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(AlgebraError::Unit(i));
            }
        }
        Ok(())
    }

    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.sparse_to_dense(self.product(i, j));
                for k in 0..self.dim {
                    let lhs = self.mul(&ij, &self.basis_vector(k));
                    let jk = self.sparse_to_dense(self.product(j, k));
                    let rhs = self.mul(&self.basis_vector(i), &jk);
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    /// Nonzero coefficients of `e_i e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.products[i * self.dim + j]
    }

    /// `sc[i][j][k]`.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> F {
        self.product(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map_or_else(F::zero, |(_, c)| c.clone())
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        unit_vector(self.dim, i)
    }

    fn sparse_to_dense(&self, v: &[(usize, F)]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (k, c) in v {
            out[*k] = c.clone();
        }
        out
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul_ref(b);
                for (k, c) in self.product(i, j) {
                    out[*k] = out[*k].add_ref(&ab.mul_ref(c));
                }
            }
        }
        out
    }

    pub fn commutator(&self, x: &[F], y: &[F]) -> Vec<F> {
        let xy = self.mul(x, y);
        let yx = self.mul(y, x);
        xy.iter().zip(&yx).map(|(a, b)| a.sub_ref(b)).collect()
    }

    /// Matrix of `y -> x y`.
    pub fn left_mult(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Matrix of `y -> y x`.
    pub fn right_mult(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Matrix of `y -> e_i y`.
    pub fn left_basis_mult(&self, i: usize) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.product(i, j) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    /// Matrix of `y -> y e_i`.
    pub fn right_basis_mult(&self, i: usize) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.product(j, i) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    /// Basis of the center, from the kernel of `x -> [x, e_i]` over all `i`.
    pub fn center(&self) -> Vec<Vec<F>> {
        let d = self.dim;
        let system = Matrix::from_fn(d * d, d, |row, j| {
            let (i, k) = (row / d, row % d);
            self.coeff(i, j, k).sub_ref(&self.coeff(j, i, k))
        });
        system.kernel_vectors()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.product(i, j) == self.product(j, i)))
    }

    pub fn is_central(&self, x: &[F]) -> bool {
        (0..self.dim).all(|i| {
            self.commutator(x, &self.basis_vector(i))
                .iter()
                .all(|c| c.is_zero())
        })
    }

    /// `A (x) B` with `e_i (x) f_p` at index `i * dim B + p`.
    pub fn tensor(&self, other: &StructAlgebra<F>) -> StructAlgebra<F> {
        let n = other.dim;
        let unit = kron_vec(&self.unit, &other.unit);
        Self::from_fn(self.dim * n, unit, |x, y| {
            let mut out = Vec::new();
            for (k, a) in self.product(x / n, y / n) {
                for (l, b) in other.product(x % n, y % n) {
                    out.push((k * n + l, a.mul_ref(b)));
                }
            }
            out
        })
        .expect("tensor product of algebras")
    }

    pub fn opposite(&self) -> StructAlgebra<F> {
        Self::from_fn(self.dim, self.unit.clone(), |i, j| self.product(j, i).to_vec())
            .expect("opposite algebra")
    }

    /// Rewrites the algebra in the basis given by the columns of `p`
    /// (invertible). Returns `None` if `p` is singular.
    pub fn change_basis(&self, p: &Matrix<F>) -> Option<StructAlgebra<F>> {
        let pinv = p.inverse().ok()??;
        let d = self.dim;
        let cols: Vec<Vec<F>> = (0..d).map(|i| p.col(i)).collect();
        let unit = pinv.apply(&self.unit).ok()?;
        Self::from_fn(d, unit, |i, j| {
            let prod = pinv.apply(&self.mul(&cols[i], &cols[j])).expect("shape");
            prod.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
        })
        .ok()
    }

    /// Trace form `(x, y) -> tr(L_{xy})` on basis elements.
    pub fn trace_form(&self) -> Matrix<F> {
        let traces: Vec<F> = (0..self.dim)
            .map(|k| self.left_basis_mult(k).trace().expect("square"))
            .collect();
        Matrix::from_fn(self.dim, self.dim, |i, j| {
            self.product(i, j)
                .iter()
                .fold(F::zero(), |acc, (k, c)| acc.add_ref(&c.mul_ref(&traces[*k])))
        })
    }

    /// `k^n` with orthogonal idempotent basis.
    pub fn diagonal(n: usize) -> Self {
        Self::from_fn(n, vec![F::one(); n], |i, j| {
            if i == j {
                vec![(i, F::one())]
            } else {
                Vec::new()
            }
        })
        .expect("diagonal algebra")
    }

    /// `M_n(k)` with matrix units `E_rc` at index `r * n + c`.
    pub fn matrix_algebra(n: usize) -> Self {
        let unit = (0..n * n).map(|x| if x / n == x % n { F::one() } else { F::zero() }).collect();
        Self::from_fn(n * n, unit, |x, y| {
            let (r, c, r2, c2) = (x / n, x % n, y / n, y % n);
            if c == r2 {
                vec![(r * n + c2, F::one())]
            } else {
                Vec::new()
            }
        })
        .expect("matrix algebra")
    }

    /// `k[x]/(x^n)` on the monomial basis.
    pub fn truncated_polynomial(n: usize) -> Self {
        Self::from_fn(n, unit_vector(n, 0), |i, j| {
            if i + j < n {
                vec![(i + j, F::one())]
            } else {
                Vec::new()
            }
        })
        .expect("truncated polynomial algebra")
    }

    /// The group algebra `k[G]` on the group basis.
    pub fn group_algebra(group: &FiniteGroup) -> Self {
        Self::from_fn(group.order(), unit_vector(group.order(), group.identity()), |g, h| {
            vec![(group.mul(g, h), F::one())]
        })
        .expect("group algebra")
    }
}

impl<F: Cyclotomic> StructAlgebra<F> {
    /// `b_g b_h = c(g,h) b_{gh}`; fails for an invalid cocycle.
    pub fn twisted_group_algebra(c: &Cocycle) -> Result<Self, AlgebraError> {
        c.check()?;
        let g = c.group();
        let e = g.identity();
        let m = c.modulus();
        // The unit is c(1,1)^{-1} b_1.
        let mut unit = vec![F::zero(); g.order()];
        unit[e] = F::root_of_unity(m, -i64::from(c.exp(e, e)));
        Self::from_fn(g.order(), unit, |x, y| {
            vec![(g.mul(x, y), F::root_of_unity(m, i64::from(c.exp(x, y))))]
        })
    }
}

/// Result of the radical probe behind [`count_simples`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplesReport {
    pub center_dim: usize,
    pub trace_form_rank: usize,
    pub semisimple: bool,
    /// Number of simple modules; withheld when the trace form is degenerate.
    pub simples: Option<usize>,
}

/// Number of simple modules of a split semisimple algebra, which is the
/// dimension of its center. Refuses to answer when the trace form is
/// degenerate, since the algebra then has a radical.
pub fn count_simples<F: Field>(a: &StructAlgebra<F>) -> SimplesReport {
    let center_dim = a.center().len();
    let trace_form_rank = a.trace_form().rank();
    let semisimple = trace_form_rank == a.dim();
    SimplesReport {
        center_dim,
        trace_form_rank,
        semisimple,
        simples: semisimple.then_some(center_dim),
    }
}

pub(crate) fn unit_vector<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

pub(crate) fn kron_vec<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x.mul_ref(y)))
        .collect()
}

/// Shared handle, since actions and bimodules refer back to their algebra.
pub type AlgebraRef<F> = Arc<StructAlgebra<F>>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{CycScalar, Rational};
    use std::sync::Arc;

    #[test]
    fn center_dims() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(StructAlgebra::<Rational>::group_algebra(&s3).center().len(), 3);
        assert_eq!(StructAlgebra::<Rational>::matrix_algebra(2).center().len(), 1);
        assert_eq!(StructAlgebra::<Rational>::diagonal(3).center().len(), 3);
        assert_eq!(StructAlgebra::<Rational>::truncated_polynomial(3).center().len(), 3);
    }

    #[test]
    fn twisted_klein_algebra() {
        let g = Arc::new(FiniteGroup::by_name("Z2xZ2").unwrap());
        let c = Cocycle::from_fn(g, 2, |x, y| ((x % 2) * (y / 2)) as i64);
        let a = StructAlgebra::<CycScalar>::twisted_group_algebra(&c).unwrap();
        assert_eq!(a.center().len(), 1);
        let r = count_simples(&a);
        assert_eq!(r.simples, Some(1));
    }

    #[test]
    fn radical_is_detected() {
        let r = count_simples(&StructAlgebra::<Rational>::truncated_polynomial(2));
        assert!(!r.semisimple);
        assert_eq!(r.simples, None);
    }

    #[test]
    fn non_associative_rejected() {
        // e0 unit, e1 e1 = e1 + e0 is fine; make (e1 e1) e1 differ by
        // declaring e1 e1 = e2 with e2 e1 = 0 but e1 e2 = e0.
        let d = 3;
        let mut sc = vec![vec![vec![Rational::from_int(0); d]; d]; d];
        for i in 0..d {
            sc[0][i][i] = Rational::from_int(1);
            sc[i][0][i] = Rational::from_int(1);
        }
        sc[1][1][2] = Rational::from_int(1);
        sc[1][2][0] = Rational::from_int(1);
        let unit = unit_vector(d, 0);
        assert!(matches!(
            StructAlgebra::new(d, sc, unit),
            Err(AlgebraError::NonAssociative(..))
        ));
    }

    #[test]
    fn json_round_trip() {
        let a = StructAlgebra::<CycScalar>::matrix_algebra(2);
        let s = serde_json::to_string(&a).unwrap();
        let b: StructAlgebra<CycScalar> = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn tensor_centers_multiply() {
        let a = StructAlgebra::<Rational>::matrix_algebra(2);
        let b = StructAlgebra::<Rational>::group_algebra(&FiniteGroup::cyclic(3));
        assert_eq!(a.tensor(&b).center().len(), 3);
    }
}
