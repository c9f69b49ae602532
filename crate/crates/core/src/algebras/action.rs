use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{bimodule_center, twisted_bimodule, AlgebraError, StructAlgebra};
use crate::cocycles::GroupSpec;
use crate::field::Field;
use crate::groups::FiniteGroup;
use crate::linalg::{coordinates, span_rank, Matrix};

/// A left action of a finite group on an algebra by unital automorphisms.
/// `auto[g]` is the matrix of `g` on the algebra basis.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupAction<F> {
    group: Arc<FiniteGroup>,
    algebra: Arc<StructAlgebra<F>>,
    auto: Vec<Matrix<F>>,
}

/// Wire form `{"group", "auto"}`, each matrix as a list of rows. The
/// algebra is supplied separately.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ActionJson<F> {
    pub group: GroupSpec,
    pub auto: Vec<Vec<Vec<F>>>,
}

impl<F: Field> GroupAction<F> {
    pub fn new(
        group: Arc<FiniteGroup>,
        algebra: Arc<StructAlgebra<F>>,
        auto: Vec<Matrix<F>>,
    ) -> Result<Self, AlgebraError> {
        let a = GroupAction {
            group,
            algebra,
            auto,
        };
        a.check()?;
        Ok(a)
    }

    pub fn from_json(j: ActionJson<F>, algebra: Arc<StructAlgebra<F>>) -> Result<Self, AlgebraError> {
        let group = Arc::new(
            j.group
                .resolve()
                .map_err(|e| AlgebraError::Shape(e.to_string()))?,
        );
        let d = algebra.dim();
        let mut auto = Vec::new();
        for rows in j.auto {
            if rows.len() != d || rows.iter().any(|r| r.len() != d) {
                return Err(AlgebraError::Shape(format!("automorphism matrices must be {d}x{d}")));
            }
            auto.push(Matrix::from_rows(rows));
        }
        Self::new(group, algebra, auto)
    }

    pub fn to_json(&self) -> ActionJson<F> {
        let d = self.algebra.dim();
        ActionJson {
            group: GroupSpec::of(&self.group),
            auto: self
                .auto
                .iter()
                .map(|m| (0..d).map(|r| m.row(r).to_vec()).collect())
                .collect(),
        }
    }

    pub fn trivial(group: Arc<FiniteGroup>, algebra: Arc<StructAlgebra<F>>) -> Self {
        let auto = vec![Matrix::identity(algebra.dim()); group.order()];
        GroupAction {
            group,
            algebra,
            auto,
        }
    }

    pub fn check(&self) -> Result<(), AlgebraError> {
        let g = &self.group;
        let a = &self.algebra;
        let d = a.dim();
        if self.auto.len() != g.order() || self.auto.iter().any(|m| m.shape() != (d, d)) {
            return Err(AlgebraError::Shape(format!(
                "need {} automorphism matrices of size {d}x{d}",
                g.order()
            )));
        }
        if !self.auto[g.identity()].is_identity() {
            return Err(AlgebraError::NotAutomorphism(g.identity()));
        }
        for x in g.elements() {
            let m = &self.auto[x];
            if m.apply(a.unit())? != a.unit() {
                return Err(AlgebraError::NotAutomorphism(x));
            }
            let cols: Vec<Vec<F>> = (0..d).map(|i| m.col(i)).collect();
            for i in 0..d {
                for j in 0..d {
                    let mut prod = vec![F::zero(); d];
                    for (k, c) in a.product(i, j) {
                        prod[*k] = c.clone();
                    }
                    if m.apply(&prod)? != a.mul(&cols[i], &cols[j]) {
                        return Err(AlgebraError::NotAutomorphism(x));
                    }
                }
            }
            for y in g.elements() {
                if &self.auto[x] * &self.auto[y] != self.auto[g.mul(x, y)] {
                    return Err(AlgebraError::NotAction(x, y));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn algebra(&self) -> &Arc<StructAlgebra<F>> {
        &self.algebra
    }

    pub fn auto(&self, g: usize) -> &Matrix<F> {
        &self.auto[g]
    }

    pub fn act(&self, g: usize, a: &[F]) -> Vec<F> {
        self.auto[g].apply(a).expect("shape")
    }
}

/// `A x| G` on the basis `e_i g` at index `g * d + i`, with
/// `(a g)(b h) = (a g(b)) (g h)`.
pub fn crossed_product<F: Field>(action: &GroupAction<F>) -> StructAlgebra<F> {
    let a = action.algebra();
    let g = action.group();
    let d = a.dim();
    let mut unit = vec![F::zero(); d * g.order()];
    for (i, u) in a.unit().iter().enumerate() {
        unit[g.identity() * d + i] = u.clone();
    }
    StructAlgebra::from_fn(d * g.order(), unit, |x, y| {
        let (gx, i) = (x / d, x % d);
        let (gy, j) = (y / d, y % d);
        let base = g.mul(gx, gy) * d;
        let auto = action.auto(gx);
        let mut out = Vec::new();
        for k in 0..d {
            let c = auto.get(k, j);
            if c.is_zero() {
                continue;
            }
            for (l, s) in a.product(i, k) {
                out.push((base + l, c.mul_ref(s)));
            }
        }
        out
    })
    .expect("crossed product of a valid action")
}

/// Product in `(+)_g A g` computed with the operations of `A`:
/// `(x y)_k = sum_{gh = k} x_g g(y_h)`.
pub fn graded_product<F: Field>(action: &GroupAction<F>, x: &[F], y: &[F]) -> Vec<F> {
    let a = action.algebra();
    let g = action.group();
    let d = a.dim();
    let mut out = vec![F::zero(); d * g.order()];
    for p in g.elements() {
        let xp = &x[p * d..(p + 1) * d];
        if xp.iter().all(|c| c.is_zero()) {
            continue;
        }
        for q in g.elements() {
            let yq = &y[q * d..(q + 1) * d];
            if yq.iter().all(|c| c.is_zero()) {
                continue;
            }
            let prod = a.mul(xp, &action.act(p, yq));
            let k = g.mul(p, q);
            for (i, c) in prod.into_iter().enumerate() {
                out[k * d + i] = out[k * d + i].add_ref(&c);
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "F: Serialize"))]
pub struct ClassSummand<F> {
    pub representative: usize,
    pub class: Vec<usize>,
    pub centralizer: Vec<usize>,
    /// Basis of `Center_A(A g)`.
    pub center_basis: Vec<Vec<F>>,
    /// Basis of the `C_g`-invariants inside it.
    pub invariant_basis: Vec<Vec<F>>,
}

/// Both sides of `Center(A x| G) = (+)_{[g]} Center_A(A g)^{C_g}` and the
/// checks on the assembled map from right to left.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "F: Serialize"))]
pub struct CenterDecomposition<F> {
    pub summands: Vec<ClassSummand<F>>,
    pub crossed_center_dim: usize,
    pub invariant_dim: usize,
    /// Images in `A x| G` of the invariant bases, in class order.
    pub images: Vec<Vec<F>>,
    pub images_central: bool,
    pub images_independent: bool,
    /// The graded product of images agrees with the crossed-product
    /// multiplication and stays in the image.
    pub multiplicative: bool,
    /// The identity summand's unit maps to the unit of `A x| G` with scale 1.
    pub unit_preserved: bool,
}

impl<F> CenterDecomposition<F> {
    pub fn dims_agree(&self) -> bool {
        self.crossed_center_dim == self.invariant_dim
    }

    pub fn passes(&self) -> bool {
        self.dims_agree()
            && self.images_central
            && self.images_independent
            && self.multiplicative
            && self.unit_preserved
    }
}

pub fn center_decomposition<F: Field>(
    action: &GroupAction<F>,
) -> Result<CenterDecomposition<F>, AlgebraError> {
    action.check()?;
    let grp = action.group();
    let a = action.algebra();
    let d = a.dim();
    let conj = grp.conjugacy();
    let crossed = crossed_product(action);
    let crossed_center_dim = crossed.center().len();

    let mut summands = Vec::new();
    let mut images = Vec::new();
    for class in &conj.classes {
        let g = class[0];
        let centralizer = conj.centralizers[g].clone();
        let center_basis = bimodule_center(&twisted_bimodule(action, g));
        let r = center_basis.len();
        let mut blocks = Vec::new();
        for &h in &centralizer {
            let mut cols = Vec::with_capacity(r);
            for b in &center_basis {
                let img = action.act(h, b);
                let c = coordinates(&center_basis, &img).ok_or_else(|| {
                    AlgebraError::NotClosed(format!("element {h} moves Center_A(A{g})"))
                })?;
                cols.push(c);
            }
            blocks.push(Matrix::from_columns(r, &cols).sub(&Matrix::identity(r))?);
        }
        let invariant_basis: Vec<Vec<F>> = if r == 0 {
            Vec::new()
        } else {
            let basis = Matrix::from_columns(d, &center_basis);
            Matrix::vstack_all(r, &blocks)?
                .kernel_vectors()
                .into_iter()
                .map(|y| basis.apply(&y).expect("shape"))
                .collect()
        };
        for m in &invariant_basis {
            images.push(assemble(action, g, class, m));
        }
        summands.push(ClassSummand {
            representative: g,
            class: class.clone(),
            centralizer,
            center_basis,
            invariant_basis,
        });
    }
    let invariant_dim = images.len();
    let n = crossed.dim();
    let images_central = images.iter().all(|x| crossed.is_central(x));
    let images_independent = span_rank(n, &images) == images.len();
    let mut multiplicative = true;
    'outer: for x in &images {
        for y in &images {
            let graded = graded_product(action, x, y);
            if graded != crossed.mul(x, y) || coordinates(&images, &graded).is_none() {
                multiplicative = false;
                break 'outer;
            }
        }
    }
    let unit_image = assemble(action, grp.identity(), &[grp.identity()], a.unit());
    let unit_preserved = unit_image == crossed.unit();
    Ok(CenterDecomposition {
        summands,
        crossed_center_dim,
        invariant_dim,
        images,
        images_central,
        images_independent,
        multiplicative,
        unit_preserved,
    })
}

/// `m` in the summand of `g` goes to `sum_x s_x(m)` placed in the summand
/// of `x = s_x g s_x^-1`, over the class of `g`, with `s_x` the smallest
/// conjugator. No extra scalar.
fn assemble<F: Field>(action: &GroupAction<F>, g: usize, class: &[usize], m: &[F]) -> Vec<F> {
    let grp = action.group();
    let d = action.algebra().dim();
    let mut out = vec![F::zero(); d * grp.order()];
    for &x in class {
        let s = grp
            .elements()
            .find(|&s| grp.conjugate(s, g) == x)
            .expect("x lies in the class of g");
        for (i, c) in action.act(s, m).into_iter().enumerate() {
            out[x * d + i] = c;
        }
    }
    out
}

/// Which candidate element of `k[G]` matches the image of the basis vector
/// of the summand `[g]` for the trivial action on `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateReport {
    pub representative: usize,
    /// `sum_{h in C_g} h^-1` is central in `k[G]`.
    pub centralizer_sum_central: bool,
    /// `sum_{h in [g]} h^-1` is central in `k[G]`.
    pub class_inverse_sum_central: bool,
    /// The centralizer sum is a multiple of the image.
    pub centralizer_sum_matches: bool,
    /// The inverse class sum is a multiple of the image.
    pub class_inverse_sum_matches: bool,
    /// The image is the class sum `sum_{x in [g]} x`.
    pub image_is_class_sum: bool,
}

pub fn trivial_action_candidates<F: Field>(group: Arc<FiniteGroup>) -> Vec<CandidateReport> {
    let k = Arc::new(StructAlgebra::<F>::diagonal(1));
    let action = GroupAction::trivial(group.clone(), k);
    let kg = StructAlgebra::<F>::group_algebra(&group);
    let dec = center_decomposition(&action).expect("trivial action is valid");
    let n = group.order();
    let indicator = |elems: &mut dyn Iterator<Item = usize>| {
        let mut v = vec![F::zero(); n];
        for x in elems {
            v[x] = v[x].add_ref(&F::one());
        }
        v
    };
    dec.summands
        .iter()
        .zip(&dec.images)
        .map(|(s, image)| {
            let cent = indicator(&mut s.centralizer.iter().map(|&h| group.inv(h)));
            let cls = indicator(&mut s.class.iter().map(|&h| group.inv(h)));
            let class_sum = indicator(&mut s.class.iter().copied());
            CandidateReport {
                representative: s.representative,
                centralizer_sum_central: kg.is_central(&cent),
                class_inverse_sum_central: kg.is_central(&cls),
                centralizer_sum_matches: span_rank(n, &[cent.clone(), image.clone()]) == 1,
                class_inverse_sum_matches: span_rank(n, &[cls.clone(), image.clone()]) == 1,
                image_is_class_sum: image == &class_sum,
            }
        })
        .collect()
}
