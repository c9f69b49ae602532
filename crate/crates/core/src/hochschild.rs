//! Hochschild cohomology through the bar complex.
//!
//! A cochain of degree `n` is a multilinear map `A^{(x)n} -> M`, stored by its
//! values on basis tuples: coordinate `t * dim M + r` is the `r`-th component
//! of `f(e_{i_1}, ..., e_{i_n})`, where `t` is the tuple index with `i_1` most
//! significant.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::algebras::{
    bimodule_center, center_decomposition, crossed_product, kunneth_center, twisted_bimodule, AlgebraError,
    Bimodule, GroupAction, KunnethCenterReport, StructAlgebra,
};
use crate::field::Field;
use crate::linalg::{Matrix, SparseRows};

pub const DEFAULT_MAX_DEGREE: usize = 3;
pub const DEFAULT_CAP: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HochschildError {
    #[error("degree {degree} needs {size} cochain coordinates, above the cap of {cap}")]
    CapExceeded { degree: usize, size: usize, cap: usize },
    #[error("the unit is zero, so no basis starts with it")]
    ZeroUnit,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HHOptions {
    pub max_degree: usize,
    /// Bound on `dim C^D = (dim A)^D dim M`.
    pub cap: usize,
    /// Use cochains that vanish as soon as one argument is the unit.
    pub normalized: bool,
}

impl Default for HHOptions {
    fn default() -> Self {
        HHOptions {
            max_degree: DEFAULT_MAX_DEGREE,
            cap: DEFAULT_CAP,
            normalized: false,
        }
    }
}

impl HHOptions {
    pub fn degree(max_degree: usize) -> Self {
        HHOptions {
            max_degree,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HHReport {
    /// `dim HH^n` for `n = 0..=max_degree`.
    pub dims: Vec<usize>,
    /// `dim C^n` for `n = 0..=max_degree`.
    pub cochain_dims: Vec<usize>,
    /// `rank delta^n` for `n = 0..=max_degree`.
    pub ranks: Vec<usize>,
    pub normalized: bool,
    /// `delta^{n+1} delta^n = 0` for every `n + 1 <= max_degree`.
    pub delta_squared_zero: bool,
    pub center_dim: usize,
}

impl HHReport {
    pub fn degree_zero_is_center(&self) -> bool {
        self.dims[0] == self.center_dim
    }
}

/// The pieces of the bar complex, all in one basis of `A`.
struct BarComplex<'a, F> {
    algebra: &'a StructAlgebra<F>,
    module: &'a Bimodule<F>,
    /// Algebra basis indices allowed as arguments.
    alphabet: Vec<usize>,
    /// Position of an algebra index in `alphabet`.
    pos: Vec<Option<usize>>,
}

impl<'a, F: Field> BarComplex<'a, F> {
    fn new(algebra: &'a StructAlgebra<F>, module: &'a Bimodule<F>, skip_first: bool) -> Self {
        let d = algebra.dim();
        let alphabet: Vec<usize> = (usize::from(skip_first)..d).collect();
        let mut pos = vec![None; d];
        for (p, &i) in alphabet.iter().enumerate() {
            pos[i] = Some(p);
        }
        BarComplex {
            algebra,
            module,
            alphabet,
            pos,
        }
    }

    fn tuples(&self, n: usize) -> usize {
        self.alphabet.len().pow(n as u32)
    }

    fn cochain_dim(&self, n: usize) -> usize {
        self.tuples(n) * self.module.dim()
    }

    /// `delta^n: C^n -> C^{n+1}` with one row per coordinate of `C^{n+1}`.
    fn differential(&self, n: usize) -> SparseRows<F> {
        let a = self.alphabet.len();
        let dm = self.module.dim();
        let mut out = SparseRows::new(self.cochain_dim(n));
        let sign = |k: usize| if k % 2 == 0 { F::one() } else { -F::one() };
        let mut digits = vec![0usize; n + 1];
        for t in 0..self.tuples(n + 1) {
            let mut rest = t;
            for slot in digits.iter_mut().rev() {
                *slot = rest % a;
                rest /= a;
            }
            let encode = |ds: &[usize]| ds.iter().fold(0usize, |acc, &x| acc * a + x);
            let first = self.alphabet[digits[0]];
            let last = self.alphabet[digits[n]];
            let tail = encode(&digits[1..]);
            let head = encode(&digits[..n]);
            // Middle terms only depend on the tuple, not on the component.
            let mut middle: Vec<(usize, F)> = Vec::new();
            for k in 1..=n {
                let (x, y) = (self.alphabet[digits[k - 1]], self.alphabet[digits[k]]);
                for (s, c) in self.algebra.product(x, y) {
                    if let Some(p) = self.pos[*s] {
                        let mut merged: Vec<usize> = Vec::with_capacity(n);
                        merged.extend_from_slice(&digits[..k - 1]);
                        merged.push(p);
                        merged.extend_from_slice(&digits[k + 1..]);
                        middle.push((encode(&merged), sign(k).mul_ref(c)));
                    }
                }
            }
            let left = self.module.left(first);
            let right = self.module.right(last);
            let end_sign = sign(n + 1);
            for r in 0..dm {
                let mut row = Vec::new();
                for c in 0..dm {
                    let v = left.get(r, c);
                    if !v.is_zero() {
                        row.push((tail * dm + c, v.clone()));
                    }
                    let v = right.get(r, c);
                    if !v.is_zero() {
                        row.push((head * dm + c, end_sign.mul_ref(v)));
                    }
                }
                for (idx, c) in &middle {
                    row.push((idx * dm + r, c.clone()));
                }
                out.push_row(row);
            }
        }
        out
    }
}

fn check_cap(d: usize, dim_m: usize, max_degree: usize, cap: usize) -> Result<(), HochschildError> {
    let size = d
        .checked_pow(max_degree as u32)
        .and_then(|x| x.checked_mul(dim_m))
        .unwrap_or(usize::MAX);
    if size > cap {
        return Err(HochschildError::CapExceeded {
            degree: max_degree,
            size,
            cap,
        });
    }
    Ok(())
}

/// A basis of `A` whose first element is the unit: the unit followed by the
/// standard basis vectors other than the first one the unit involves.
fn unit_first_basis<F: Field>(a: &StructAlgebra<F>) -> Result<Matrix<F>, HochschildError> {
    let d = a.dim();
    let lead = a.unit().iter().position(|c| !c.is_zero()).ok_or(HochschildError::ZeroUnit)?;
    let mut cols = vec![a.unit().to_vec()];
    cols.extend((0..d).filter(|&i| i != lead).map(|i| a.basis_vector(i)));
    Ok(Matrix::from_columns(d, &cols))
}

fn dims_from_complex<F: Field>(cx: &BarComplex<'_, F>, max_degree: usize) -> (Vec<usize>, Vec<usize>, Vec<usize>, bool) {
    let deltas: Vec<SparseRows<F>> = (0..=max_degree).map(|n| cx.differential(n)).collect();
    let ranks: Vec<usize> = deltas.iter().map(|d| d.rank()).collect();
    let cochain_dims: Vec<usize> = (0..=max_degree).map(|n| cx.cochain_dim(n)).collect();
    let dims = (0..=max_degree)
        .map(|n| cochain_dims[n] - ranks[n] - if n == 0 { 0 } else { ranks[n - 1] })
        .collect();
    let squared_zero = (0..max_degree).all(|n| deltas[n + 1].matmul(&deltas[n]).is_zero());
    (dims, cochain_dims, ranks, squared_zero)
}

/// `dim HH^n(A, M)` for `n <= opts.max_degree`.
pub fn hochschild_dims<F: Field>(
    a: &StructAlgebra<F>,
    m: &Bimodule<F>,
    opts: HHOptions,
) -> Result<HHReport, HochschildError> {
    a.check()?;
    if m.algebra().as_ref() != a {
        return Err(AlgebraError::Shape("bimodule over a different algebra".into()).into());
    }
    m.check()?;
    let d = a.dim();
    let reduced_d = if opts.normalized { d.saturating_sub(1) } else { d };
    check_cap(reduced_d, m.dim(), opts.max_degree, opts.cap)?;
    let center_dim = bimodule_center(m).len();
    let (dims, cochain_dims, ranks, delta_squared_zero) = if opts.normalized {
        let p = unit_first_basis(a)?;
        let a2 = Arc::new(a.change_basis(&p).expect("unit-first basis is invertible"));
        let m2 = m.change_algebra_basis(a2.clone(), &p);
        dims_from_complex(&BarComplex::new(&a2, &m2, true), opts.max_degree)
    } else {
        dims_from_complex(&BarComplex::new(a, m, false), opts.max_degree)
    };
    Ok(HHReport {
        dims,
        cochain_dims,
        ranks,
        normalized: opts.normalized,
        delta_squared_zero,
        center_dim,
    })
}

/// `HH^n(A) = HH^n(A, A)`.
pub fn hochschild_self<F: Field>(a: &Arc<StructAlgebra<F>>, opts: HHOptions) -> Result<HHReport, HochschildError> {
    hochschild_dims(a, &Bimodule::regular(a.clone()), opts)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KunnethDegree {
    pub degree: usize,
    /// `sum_{p+q=n} dim HH^p(A) dim HH^q(B)`.
    pub product_side: usize,
    /// `dim HH^n(A (x) B)`.
    pub tensor_side: usize,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KunnethHHReport {
    pub degrees: Vec<KunnethDegree>,
    pub center: KunnethCenterReport,
}

impl KunnethHHReport {
    pub fn passes(&self) -> bool {
        self.center.bijective && self.degrees.iter().all(|d| d.agree)
    }
}

/// Compares `HH(A) (x) HH(B)` with `HH(A (x) B)` degree by degree.
pub fn kunneth_hh<F: Field>(
    a: &Arc<StructAlgebra<F>>,
    b: &Arc<StructAlgebra<F>>,
    opts: HHOptions,
) -> Result<KunnethHHReport, HochschildError> {
    let ab = Arc::new(a.tensor(b));
    check_cap(ab.dim(), ab.dim(), opts.max_degree, opts.cap)?;
    let ha = hochschild_self(a, opts)?;
    let hb = hochschild_self(b, opts)?;
    let hab = hochschild_self(&ab, opts)?;
    let degrees = (0..=opts.max_degree)
        .map(|n| {
            let product_side = (0..=n).map(|p| ha.dims[p] * hb.dims[n - p]).sum();
            KunnethDegree {
                degree: n,
                product_side,
                tensor_side: hab.dims[n],
                agree: product_side == hab.dims[n],
            }
        })
        .collect();
    let center = kunneth_center(&Bimodule::regular(a.clone()), &Bimodule::regular(b.clone()));
    Ok(KunnethHHReport { degrees, center })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbifoldDegree {
    pub degree: usize,
    /// `dim HH^n(A x| G)`.
    pub crossed_side: usize,
    /// `dim (sum_g HH^n(A, Ag))^G`.
    pub invariant_side: usize,
    /// `dim HH^n(A, Ag)` for each `g`.
    pub per_element: Vec<usize>,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbifoldReport {
    pub degrees: Vec<OrbifoldDegree>,
    /// Invariant dimension found by the center decomposition.
    pub center_invariant_dim: usize,
    pub degree_zero_matches_center: bool,
    pub delta_squared_zero: bool,
}

impl OrbifoldReport {
    pub fn passes(&self) -> bool {
        self.degree_zero_matches_center && self.delta_squared_zero && self.degrees.iter().all(|d| d.agree)
    }
}

/// `G` acting on `(+)_g C^n(A, Ag)`: `h` sends the summand of `g` to that of
/// `h g h^-1` by `f -> u_h o f o (u_h^-1)^{(x)n}`.
fn cochain_action<F: Field>(action: &GroupAction<F>, h: usize, n: usize) -> Matrix<F> {
    let grp = action.group();
    let d = action.algebra().dim();
    let block = d.pow(n as u32) * d;
    let total = grp.order() * block;
    let uh = action.auto(h);
    let uinv = action.auto(grp.inv(h));
    // Coefficient of the input tuple i in the output tuple j.
    let tuples = d.pow(n as u32);
    let digits = |t: usize| {
        let mut ds = vec![0; n];
        let mut rest = t;
        for slot in ds.iter_mut().rev() {
            *slot = rest % d;
            rest /= d;
        }
        ds
    };
    let all_digits: Vec<Vec<usize>> = (0..tuples).map(digits).collect();
    let mut arg = Matrix::zeros(tuples, tuples);
    for (tj, j) in all_digits.iter().enumerate() {
        for (ti, i) in all_digits.iter().enumerate() {
            let v = i
                .iter()
                .zip(j)
                .fold(F::one(), |acc, (&ik, &jk)| acc.mul_ref(uinv.get(ik, jk)));
            if !v.is_zero() {
                arg.set(tj, ti, v);
            }
        }
    }
    let mut out = Matrix::zeros(total, total);
    for g in grp.elements() {
        let target = grp.conjugate(h, g);
        for tj in 0..tuples {
            for ti in 0..tuples {
                let a = arg.get(tj, ti);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..d {
                    for r in 0..d {
                        let u = uh.get(r2, r);
                        if !u.is_zero() {
                            out.set(
                                target * block + tj * d + r2,
                                g * block + ti * d + r,
                                a.mul_ref(u),
                            );
                        }
                    }
                }
            }
        }
    }
    out
}

/// Checks `HH(A x| G) = (sum_g HH(A, Ag))^G` in each degree up to
/// `opts.max_degree`, using the unnormalized complexes.
pub fn orbifold_hh_check<F: Field>(action: &GroupAction<F>, opts: HHOptions) -> Result<OrbifoldReport, HochschildError> {
    action.check()?;
    let grp = action.group();
    let a = action.algebra();
    let d = a.dim();
    let crossed = Arc::new(crossed_product(action));
    check_cap(crossed.dim(), crossed.dim(), opts.max_degree, opts.cap)?;
    check_cap(d, d * grp.order(), opts.max_degree, opts.cap)?;
    let plain = HHOptions {
        normalized: false,
        ..opts
    };
    let left = hochschild_self(&crossed, plain)?;

    let modules: Vec<Bimodule<F>> = grp.elements().map(|g| twisted_bimodule(action, g)).collect();
    let mut per_g = Vec::with_capacity(grp.order());
    let mut deltas: Vec<Vec<SparseRows<F>>> = Vec::with_capacity(grp.order());
    for m in &modules {
        per_g.push(hochschild_dims(a, m, plain)?);
        let cx = BarComplex::new(a, m, false);
        deltas.push((0..=opts.max_degree).map(|n| cx.differential(n)).collect());
    }

    // Invariant cochains in each degree, as columns.
    let invariant_bases: Vec<Vec<Vec<F>>> = (0..=opts.max_degree)
        .map(|n| {
            let dim = grp.order() * d.pow(n as u32) * d;
            let parts: Vec<Matrix<F>> = grp
                .elements()
                .filter(|&h| h != grp.identity())
                .map(|h| cochain_action(action, h, n).sub(&Matrix::identity(dim)).expect("shape"))
                .collect();
            if parts.is_empty() {
                (0..dim).map(|i| crate::algebras::unit_vector(dim, i)).collect()
            } else {
                Matrix::vstack_all(dim, &parts).expect("shape").kernel_vectors()
            }
        })
        .collect();

    // rank of delta^n on the invariants.
    let ranks: Vec<usize> = (0..=opts.max_degree)
        .map(|n| {
            let block = d.pow(n as u32) * d;
            let next_block = block * d;
            let mut images = SparseRows::new(grp.order() * next_block);
            for v in &invariant_bases[n] {
                let mut row = Vec::new();
                for g in grp.elements() {
                    let piece = &v[g * block..(g + 1) * block];
                    let delta = &deltas[g][n];
                    for r in 0..delta.nrows() {
                        let mut acc = F::zero();
                        for (c, x) in delta.row(r) {
                            if !piece[*c].is_zero() {
                                acc = acc.add_ref(&x.mul_ref(&piece[*c]));
                            }
                        }
                        if !acc.is_zero() {
                            row.push((g * next_block + r, acc));
                        }
                    }
                }
                images.push_row(row);
            }
            images.rank()
        })
        .collect();

    let degrees = (0..=opts.max_degree)
        .map(|n| {
            let invariant_side = invariant_bases[n].len() - ranks[n] - if n == 0 { 0 } else { ranks[n - 1] };
            OrbifoldDegree {
                degree: n,
                crossed_side: left.dims[n],
                invariant_side,
                per_element: per_g.iter().map(|r| r.dims[n]).collect(),
                agree: left.dims[n] == invariant_side,
            }
        })
        .collect::<Vec<_>>();
    let decomposition = center_decomposition(action)?;
    let center_invariant_dim = decomposition.invariant_dim;
    Ok(OrbifoldReport {
        degree_zero_matches_center: degrees[0].invariant_side == center_invariant_dim
            && degrees[0].crossed_side == decomposition.crossed_center_dim,
        degrees,
        center_invariant_dim,
        delta_squared_zero: left.delta_squared_zero && per_g.iter().all(|r| r.delta_squared_zero),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::fixtures;
    use crate::field::Rational;
    use crate::groups::FiniteGroup;

    #[test]
    fn separable_and_dual_numbers() {
        let kk = Arc::new(StructAlgebra::<Rational>::diagonal(2));
        let r = hochschild_self(&kk, HHOptions::default()).unwrap();
        assert_eq!(r.dims, vec![2, 0, 0, 0]);
        assert!(r.delta_squared_zero);
        let dual = Arc::new(StructAlgebra::<Rational>::truncated_polynomial(2));
        let r = hochschild_self(&dual, HHOptions::default()).unwrap();
        assert_eq!(r.dims, vec![2, 1, 1, 1]);
        let n = hochschild_self(
            &dual,
            HHOptions {
                normalized: true,
                ..HHOptions::default()
            },
        )
        .unwrap();
        assert_eq!(n.dims, r.dims);
    }

    #[test]
    fn orbifold_sign_and_trivial() {
        let r = orbifold_hh_check(&fixtures::sign_action::<Rational>(), HHOptions::degree(2)).unwrap();
        assert!(r.passes(), "{r:?}");
        let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
        let k = Arc::new(StructAlgebra::<Rational>::diagonal(1));
        let r = orbifold_hh_check(&GroupAction::trivial(s3, k), HHOptions::degree(2)).unwrap();
        assert!(r.passes(), "{r:?}");
        assert_eq!(r.degrees.iter().map(|d| d.crossed_side).collect::<Vec<_>>(), vec![3, 0, 0]);
    }

    #[test]
    fn cap_is_enforced() {
        let a = Arc::new(StructAlgebra::<Rational>::matrix_algebra(3));
        let err = hochschild_self(
            &a,
            HHOptions {
                cap: 100,
                ..HHOptions::default()
            },
        )
        .unwrap_err();
        assert!(matches!(err, HochschildError::CapExceeded { .. }));
    }
}
