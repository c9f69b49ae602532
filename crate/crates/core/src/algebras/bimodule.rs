use std::sync::Arc;

use serde::Serialize;

use super::{kron_vec, AlgebraError, GroupAction, StructAlgebra};
use crate::field::Field;
use crate::linalg::{coordinates, span_rank, Matrix};

/// An `A`-`A`-bimodule given by the action matrices of basis elements:
/// `left[i]` is `m -> e_i m` and `right[i]` is `m -> m e_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bimodule<F> {
    algebra: Arc<StructAlgebra<F>>,
    dim: usize,
    left: Vec<Matrix<F>>,
    right: Vec<Matrix<F>>,
}

impl<F: Field> Bimodule<F> {
    pub fn new(
        algebra: Arc<StructAlgebra<F>>,
        dim: usize,
        left: Vec<Matrix<F>>,
        right: Vec<Matrix<F>>,
    ) -> Result<Self, AlgebraError> {
        let m = Bimodule {
            algebra,
            dim,
            left,
            right,
        };
        m.check()?;
        Ok(m)
    }

    /// Checks shapes, that both actions are unital and multiplicative, and
    /// that they commute.
    pub fn check(&self) -> Result<(), AlgebraError> {
        let a = &self.algebra;
        let d = a.dim();
        let n = self.dim;
        if self.left.len() != d || self.right.len() != d {
            return Err(AlgebraError::Shape("one action matrix per basis element".into()));
        }
        if self.left.iter().chain(&self.right).any(|m| m.shape() != (n, n)) {
            return Err(AlgebraError::Shape(format!("action matrices must be {n}x{n}")));
        }
        let combine = |mats: &[Matrix<F>], v: &[F]| -> Matrix<F> {
            let mut acc = Matrix::zeros(n, n);
            for (k, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    acc = acc.add(&mats[k].scale(c)).expect("shape");
                }
            }
            acc
        };
        if !combine(&self.left, a.unit()).is_identity() || !combine(&self.right, a.unit()).is_identity() {
            return Err(AlgebraError::ModuleLaw("unit does not act as the identity".into()));
        }
        for i in 0..d {
            for j in 0..d {
                let mut prod = vec![F::zero(); d];
                for (k, c) in a.product(i, j) {
                    prod[*k] = c.clone();
                }
                if &self.left[i] * &self.left[j] != combine(&self.left, &prod) {
                    return Err(AlgebraError::ModuleLaw(format!("left action at ({i}, {j})")));
                }
                if &self.right[j] * &self.right[i] != combine(&self.right, &prod) {
                    return Err(AlgebraError::ModuleLaw(format!("right action at ({i}, {j})")));
                }
                if &self.left[i] * &self.right[j] != &self.right[j] * &self.left[i] {
                    return Err(AlgebraError::ModuleLaw(format!("actions do not commute at ({i}, {j})")));
                }
            }
        }
        Ok(())
    }

    /// `A` acting on itself from both sides.
    pub fn regular(algebra: Arc<StructAlgebra<F>>) -> Self {
        let d = algebra.dim();
        let left = (0..d).map(|i| algebra.left_basis_mult(i)).collect();
        let right = (0..d).map(|i| algebra.right_basis_mult(i)).collect();
        Bimodule {
            algebra,
            dim: d,
            left,
            right,
        }
    }

    pub fn zero(algebra: Arc<StructAlgebra<F>>) -> Self {
        let d = algebra.dim();
        Bimodule {
            algebra,
            dim: 0,
            left: vec![Matrix::zeros(0, 0); d],
            right: vec![Matrix::zeros(0, 0); d],
        }
    }

    pub fn algebra(&self) -> &Arc<StructAlgebra<F>> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left(&self, i: usize) -> &Matrix<F> {
        &self.left[i]
    }

    pub fn right(&self, i: usize) -> &Matrix<F> {
        &self.right[i]
    }

    pub fn left_action(&self, a: &[F], m: &[F]) -> Vec<F> {
        apply_combination(&self.left, a, m)
    }

    pub fn right_action(&self, m: &[F], a: &[F]) -> Vec<F> {
        apply_combination(&self.right, a, m)
    }

    /// `M (x) N` over `A (x) B`, row-major pairing.
    pub fn tensor(&self, other: &Bimodule<F>) -> Bimodule<F> {
        let algebra = Arc::new(self.algebra.tensor(&other.algebra));
        let mut left = Vec::new();
        let mut right = Vec::new();
        for i in 0..self.algebra.dim() {
            for p in 0..other.algebra.dim() {
                left.push(self.left[i].kron(&other.left[p]));
                right.push(self.right[i].kron(&other.right[p]));
            }
        }
        Bimodule {
            algebra,
            dim: self.dim * other.dim,
            left,
            right,
        }
    }

    /// Direct sum of bimodules over the same algebra.
    pub fn direct_sum(&self, other: &Bimodule<F>) -> Bimodule<F> {
        assert_eq!(self.algebra, other.algebra, "direct sum over different algebras");
        let stack = |a: &Matrix<F>, b: &Matrix<F>| block_diag(a, b);
        Bimodule {
            algebra: self.algebra.clone(),
            dim: self.dim + other.dim,
            left: self.left.iter().zip(&other.left).map(|(a, b)| stack(a, b)).collect(),
            right: self.right.iter().zip(&other.right).map(|(a, b)| stack(a, b)).collect(),
        }
    }

    /// Rewrites the action in the algebra basis given by the columns of `p`;
    /// the module basis is unchanged.
    pub fn change_algebra_basis(&self, algebra: Arc<StructAlgebra<F>>, p: &Matrix<F>) -> Bimodule<F> {
        let d = self.algebra.dim();
        let comb = |mats: &[Matrix<F>], i: usize| {
            let mut acc = Matrix::zeros(self.dim, self.dim);
            for k in 0..d {
                let c = p.get(k, i);
                if !c.is_zero() {
                    acc = acc.add(&mats[k].scale(c)).expect("shape");
                }
            }
            acc
        };
        Bimodule {
            algebra,
            dim: self.dim,
            left: (0..d).map(|i| comb(&self.left, i)).collect(),
            right: (0..d).map(|i| comb(&self.right, i)).collect(),
        }
    }
}

fn apply_combination<F: Field>(mats: &[Matrix<F>], a: &[F], m: &[F]) -> Vec<F> {
    let mut out = vec![F::zero(); m.len()];
    for (k, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let v = mats[k].apply(m).expect("shape");
        for (o, x) in out.iter_mut().zip(v) {
            *o = o.add_ref(&c.mul_ref(&x));
        }
    }
    out
}

pub(crate) fn block_diag<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let (ra, ca) = a.shape();
    Matrix::from_fn(ra + b.rows(), ca + b.cols(), |r, c| {
        if r < ra && c < ca {
            a.get(r, c).clone()
        } else if r >= ra && c >= ca {
            b.get(r - ra, c - ca).clone()
        } else {
            F::zero()
        }
    })
}

/// `Center_A(M) = {m : e_i m = m e_i for all i}`.
pub fn bimodule_center<F: Field>(m: &Bimodule<F>) -> Vec<Vec<F>> {
    let n = m.dim;
    if n == 0 {
        return Vec::new();
    }
    let parts: Vec<Matrix<F>> = m
        .left
        .iter()
        .zip(&m.right)
        .map(|(l, r)| l.sub(r).expect("shape"))
        .collect();
    Matrix::vstack_all(n, &parts).expect("shape").kernel_vectors()
}

/// `A g`: the regular bimodule with the right action precomposed with
/// `g`, so that `m . a = m g(a)`.
pub fn twisted_bimodule<F: Field>(action: &GroupAction<F>, g: usize) -> Bimodule<F> {
    let a = action.algebra().clone();
    let d = a.dim();
    let reg = Bimodule::regular(a.clone());
    let auto = action.auto(g);
    let right = (0..d)
        .map(|i| {
            let mut acc = Matrix::zeros(d, d);
            for k in 0..d {
                let c = auto.get(k, i);
                if !c.is_zero() {
                    acc = acc.add(&reg.right[k].scale(c)).expect("shape");
                }
            }
            acc
        })
        .collect();
    Bimodule {
        algebra: a,
        dim: d,
        left: reg.left,
        right,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KunnethCenterReport {
    pub center_m: usize,
    pub center_n: usize,
    pub center_tensor: usize,
    /// Rank of the Kronecker products of the two center bases.
    pub image_rank: usize,
    pub bijective: bool,
}

/// Compares `Center_A(M) (x) Center_B(N)` with `Center_{A(x)B}(M (x) N)`
/// through the map sending `x (x) y` to the Kronecker product.
pub fn kunneth_center<F: Field>(m: &Bimodule<F>, n: &Bimodule<F>) -> KunnethCenterReport {
    let zm = bimodule_center(m);
    let zn = bimodule_center(n);
    let t = m.tensor(n);
    let zt = bimodule_center(&t);
    let images: Vec<Vec<F>> = zm
        .iter()
        .flat_map(|x| zn.iter().map(move |y| kron_vec(x, y)))
        .collect();
    let image_rank = span_rank(t.dim(), &images);
    let central = images.iter().all(|v| coordinates(&zt, v).is_some());
    KunnethCenterReport {
        center_m: zm.len(),
        center_n: zn.len(),
        center_tensor: zt.len(),
        image_rank,
        bijective: central && image_rank == images.len() && image_rank == zt.len(),
    }
}

/// A bimodule with compatible automorphisms `u_g`:
/// `u_g(a m b) = g(a) u_g(m) g(b)`, `u_1 = id`, `u_g u_h = u_{gh}`.
#[derive(Debug, Clone)]
pub struct EquivariantBimodule<F> {
    pub base: Bimodule<F>,
    pub compat: Vec<Matrix<F>>,
}

impl<F: Field> EquivariantBimodule<F> {
    pub fn new(
        base: Bimodule<F>,
        compat: Vec<Matrix<F>>,
        action: &GroupAction<F>,
    ) -> Result<Self, AlgebraError> {
        let e = EquivariantBimodule { base, compat };
        e.check(action)?;
        Ok(e)
    }

    pub fn check(&self, action: &GroupAction<F>) -> Result<(), AlgebraError> {
        let g = action.group();
        let n = self.base.dim;
        let d = self.base.algebra.dim();
        if self.compat.len() != g.order() || self.compat.iter().any(|u| u.shape() != (n, n)) {
            return Err(AlgebraError::Compatibility("one n x n matrix per group element".into()));
        }
        if !self.compat[g.identity()].is_identity() {
            return Err(AlgebraError::Compatibility("u_1 is not the identity".into()));
        }
        for x in g.elements() {
            for y in g.elements() {
                if &self.compat[x] * &self.compat[y] != self.compat[g.mul(x, y)] {
                    return Err(AlgebraError::Compatibility(format!("u_{x} u_{y} != u_{x}{y}")));
                }
            }
            let u = &self.compat[x];
            let auto = action.auto(x);
            for i in 0..d {
                let ga = auto.col(i);
                let lhs_l = u * &self.base.left[i];
                let rhs_l = &combine(&self.base.left, &ga, n) * u;
                let lhs_r = u * &self.base.right[i];
                let rhs_r = &combine(&self.base.right, &ga, n) * u;
                if lhs_l != rhs_l || lhs_r != rhs_r {
                    return Err(AlgebraError::Compatibility(format!(
                        "u_{x} is not twisted-linear at e{i}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `(+)_g A g` with `u_h` sending `m` in summand `g` to `h(m)` in summand
    /// `h g h^-1`. The summand of `g` occupies coordinates `g*d .. (g+1)*d`.
    pub fn conjugation_sum(action: &GroupAction<F>) -> Self {
        let grp = action.group();
        let d = action.algebra().dim();
        let mut base: Option<Bimodule<F>> = None;
        for g in grp.elements() {
            let b = twisted_bimodule(action, g);
            base = Some(match base {
                None => b,
                Some(acc) => acc.direct_sum(&b),
            });
        }
        let base = base.expect("nonempty group");
        let n = d * grp.order();
        let compat = grp
            .elements()
            .map(|h| {
                let auto = action.auto(h);
                let mut u = Matrix::zeros(n, n);
                for g in grp.elements() {
                    let t = grp.conjugate(h, g);
                    for r in 0..d {
                        for c in 0..d {
                            u.set(t * d + r, g * d + c, auto.get(r, c).clone());
                        }
                    }
                }
                u
            })
            .collect();
        EquivariantBimodule { base, compat }
    }
}

fn combine<F: Field>(mats: &[Matrix<F>], v: &[F], n: usize) -> Matrix<F> {
    let mut acc = Matrix::zeros(n, n);
    for (k, c) in v.iter().enumerate() {
        if !c.is_zero() {
            acc = acc.add(&mats[k].scale(c)).expect("shape");
        }
    }
    acc
}

#[derive(Debug, Clone, PartialEq)]
pub struct TraceActionReport<F> {
    /// Basis of `Center_A(M)`.
    pub center: Vec<Vec<F>>,
    /// Matrix of `u_g` on the center basis, per group element.
    pub matrices: Vec<Matrix<F>>,
    /// Basis of the invariants, in coordinates of the ambient module.
    pub invariants: Vec<Vec<F>>,
}

/// Restricts each `u_g` to `Center_A(M)`, verifying that the center is
/// preserved, and computes the fixed points.
pub fn equivariant_trace_action<F: Field>(
    e: &EquivariantBimodule<F>,
    action: &GroupAction<F>,
) -> Result<TraceActionReport<F>, AlgebraError> {
    e.check(action)?;
    let center = bimodule_center(&e.base);
    let r = center.len();
    let n = e.base.dim;
    let mut matrices = Vec::new();
    for (g, u) in e.compat.iter().enumerate() {
        let mut cols = Vec::with_capacity(r);
        for b in &center {
            let img = u.apply(b)?;
            let coords = coordinates(&center, &img)
                .ok_or_else(|| AlgebraError::NotClosed(format!("u_{g} leaves the center")))?;
            cols.push(coords);
        }
        matrices.push(Matrix::from_columns(r, &cols));
    }
    let invariants = if r == 0 {
        Vec::new()
    } else {
        let parts: Vec<Matrix<F>> = matrices
            .iter()
            .map(|m| m.sub(&Matrix::identity(r)).expect("shape"))
            .collect();
        let basis = Matrix::from_columns(n, &center);
        Matrix::vstack_all(r, &parts)?
            .kernel_vectors()
            .into_iter()
            .map(|y| basis.apply(&y).expect("shape"))
            .collect()
    };
    Ok(TraceActionReport {
        center,
        matrices,
        invariants,
    })
}
