use serde::Serialize;

use super::{crossed_product, AlgebraError, GroupAction, StructAlgebra};
use crate::field::Field;
use crate::linalg::{coordinates, Matrix, SparseRows};

/// A left module given by the matrices of the basis elements of its algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct LeftModule<F> {
    dim: usize,
    act: Vec<Matrix<F>>,
}

impl<F: Field> LeftModule<F> {
    pub fn new(algebra: &StructAlgebra<F>, dim: usize, act: Vec<Matrix<F>>) -> Result<Self, AlgebraError> {
        let m = LeftModule { dim, act };
        m.check(algebra)?;
        Ok(m)
    }

    pub fn check(&self, a: &StructAlgebra<F>) -> Result<(), AlgebraError> {
        let d = a.dim();
        let n = self.dim;
        if self.act.len() != d || self.act.iter().any(|m| m.shape() != (n, n)) {
            return Err(AlgebraError::Shape(format!("need {d} action matrices of size {n}x{n}")));
        }
        if !self.of(a.unit()).is_identity() {
            return Err(AlgebraError::ModuleLaw("unit does not act as the identity".into()));
        }
        for i in 0..d {
            for j in 0..d {
                let mut prod = vec![F::zero(); d];
                for (k, c) in a.product(i, j) {
                    prod[*k] = c.clone();
                }
                if &self.act[i] * &self.act[j] != self.of(&prod) {
                    return Err(AlgebraError::ModuleLaw(format!("action at ({i}, {j})")));
                }
            }
        }
        Ok(())
    }

    pub fn regular(a: &StructAlgebra<F>) -> Self {
        LeftModule {
            dim: a.dim(),
            act: (0..a.dim()).map(|i| a.left_basis_mult(i)).collect(),
        }
    }

    /// The left ideal `A x` of the regular module.
    pub fn cyclic_submodule(a: &StructAlgebra<F>, x: &[F]) -> Self {
        let d = a.dim();
        let spanning: Vec<Vec<F>> = (0..d).map(|i| a.mul(&a.basis_vector(i), x)).collect();
        // Keep the pivot columns of the spanning family as a basis.
        let pivots = Matrix::from_columns(d, &spanning).rref().pivots;
        let basis: Vec<Vec<F>> = pivots.iter().map(|&c| spanning[c].clone()).collect();
        let n = basis.len();
        let act = (0..d)
            .map(|i| {
                let cols: Vec<Vec<F>> = basis
                    .iter()
                    .map(|b| {
                        coordinates(&basis, &a.mul(&a.basis_vector(i), b)).expect("left ideal is closed")
                    })
                    .collect();
                Matrix::from_columns(n, &cols)
            })
            .collect();
        LeftModule { dim: n, act }
    }

    /// The same module in the basis given by the columns of `p`.
    pub fn conjugate(&self, p: &Matrix<F>) -> Option<Self> {
        let pinv = p.inverse().ok()??;
        Some(LeftModule {
            dim: self.dim,
            act: self.act.iter().map(|m| &(&pinv * m) * p).collect(),
        })
    }

    pub fn direct_sum(&self, other: &LeftModule<F>) -> Self {
        LeftModule {
            dim: self.dim + other.dim,
            act: self
                .act
                .iter()
                .zip(&other.act)
                .map(|(a, b)| super::bimodule::block_diag(a, b))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn act(&self, i: usize) -> &Matrix<F> {
        &self.act[i]
    }

    /// Matrix of an arbitrary algebra element.
    pub fn of(&self, a: &[F]) -> Matrix<F> {
        let mut acc = Matrix::zeros(self.dim, self.dim);
        for (k, c) in a.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&self.act[k].scale(c)).expect("shape");
            }
        }
        acc
    }

    /// `(A x| G) (x)_A M` on the basis `g (x) m` at index `g * dim M + m`.
    /// The element `a h` sends `g (x) m` to `hg (x) (hg)^-1(a) m`.
    pub fn induce(&self, action: &GroupAction<F>) -> LeftModule<F> {
        let grp = action.group();
        let d = action.algebra().dim();
        let n = self.dim;
        let total = grp.order() * n;
        let mut act = Vec::with_capacity(grp.order() * d);
        for h in grp.elements() {
            for i in 0..d {
                let mut m = Matrix::zeros(total, total);
                for g in grp.elements() {
                    let hg = grp.mul(h, g);
                    let a = action.act(grp.inv(hg), &action.algebra().basis_vector(i));
                    let block = self.of(&a);
                    for r in 0..n {
                        for c in 0..n {
                            let v = block.get(r, c);
                            if !v.is_zero() {
                                m.set(hg * n + r, g * n + c, v.clone());
                            }
                        }
                    }
                }
                act.push(m);
            }
        }
        LeftModule { dim: total, act }
    }

    /// Restriction of an `A x| G`-module along `a -> a 1`.
    pub fn restrict(&self, action: &GroupAction<F>) -> LeftModule<F> {
        let d = action.algebra().dim();
        let base = action.group().identity() * d;
        LeftModule {
            dim: self.dim,
            act: (0..d).map(|i| self.act[base + i].clone()).collect(),
        }
    }
}

/// `dim Hom_A(M, N)`, the solution space of `f rho_M(e_i) = rho_N(e_i) f`.
pub fn module_hom_dim<F: Field>(m: &LeftModule<F>, n: &LeftModule<F>) -> Result<usize, AlgebraError> {
    if m.act.len() != n.act.len() {
        return Err(AlgebraError::Shape("modules over different algebras".into()));
    }
    let (dm, dn) = (m.dim, n.dim);
    let unknowns = dn * dm;
    if unknowns == 0 {
        return Ok(0);
    }
    let mut system = SparseRows::new(unknowns);
    for (rm, rn) in m.act.iter().zip(&n.act) {
        for r in 0..dn {
            for c in 0..dm {
                let mut row = Vec::new();
                for k in 0..dm {
                    let v = rm.get(k, c);
                    if !v.is_zero() {
                        row.push((r * dm + k, v.clone()));
                    }
                }
                for k in 0..dn {
                    let v = rn.get(r, k);
                    if !v.is_zero() {
                        row.push((k * dm + c, -v.clone()));
                    }
                }
                system.push_row(row);
            }
        }
    }
    Ok(unknowns - system.rank())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjunctionReport {
    /// `dim Hom_{A x| G}(Ind M, N)`.
    pub induced_side: usize,
    /// `dim Hom_A(M, Res N)`.
    pub restricted_side: usize,
    pub holds: bool,
}

/// Compares both sides of the induction/restriction adjunction for
/// `A -> A x| G`, building `Ind M` explicitly.
pub fn induction_adjunction_check<F: Field>(
    action: &GroupAction<F>,
    m: &LeftModule<F>,
    n: &LeftModule<F>,
) -> Result<AdjunctionReport, AlgebraError> {
    let crossed = crossed_product(action);
    m.check(action.algebra())?;
    n.check(&crossed)?;
    let ind = m.induce(action);
    ind.check(&crossed)?;
    let induced_side = module_hom_dim(&ind, n)?;
    let restricted_side = module_hom_dim(m, &n.restrict(action))?;
    Ok(AdjunctionReport {
        induced_side,
        restricted_side,
        holds: induced_side == restricted_side,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::groups::FiniteGroup;
    use std::sync::Arc;

    #[test]
    fn k_to_group_algebra() {
        let k = Arc::new(StructAlgebra::<Rational>::diagonal(1));
        let act = GroupAction::trivial(Arc::new(FiniteGroup::cyclic(2)), k.clone());
        let m = LeftModule::regular(&k);
        let n = LeftModule::regular(&crossed_product(&act));
        let r = induction_adjunction_check(&act, &m, &n).unwrap();
        // Ind k is the regular module, so both sides are dim k[Z/2].
        assert_eq!((r.induced_side, r.restricted_side), (2, 2));
        let trivial = LeftModule::new(&crossed_product(&act), 1, vec![Matrix::identity(1); 2]).unwrap();
        let r = induction_adjunction_check(&act, &m, &trivial).unwrap();
        assert_eq!((r.induced_side, r.restricted_side), (1, 1));
    }

    #[test]
    fn hom_dims() {
        let a = StructAlgebra::<Rational>::matrix_algebra(2);
        let simple = LeftModule::cyclic_submodule(&a, &a.basis_vector(0));
        assert_eq!(simple.dim(), 2);
        assert_eq!(module_hom_dim(&simple, &simple).unwrap(), 1);
        let reg = LeftModule::regular(&a);
        assert_eq!(module_hom_dim(&reg, &reg).unwrap(), 4);
        let two = simple.direct_sum(&simple);
        assert_eq!(module_hom_dim(&two, &simple).unwrap(), 2);
    }
}
