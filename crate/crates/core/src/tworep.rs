//! 2-representations of a finite group on `Vect^m` in permutation-plus-scalar
//! normal form.
//!
//! `rho(g)` permutes the simple objects by `pi_g` (so its dimension table is
//! `[i = pi_g(j)]`). The composition isomorphism `phi_{g,h}: rho(g) rho(h)
//! => rho(gh)` has the scalar `lambda_{g,h}(j)` on the summand at column
//! `j`, and `phi_1: rho(1) => Id` has `unit_lambda(j)`.
//!
//! Coherence in components:
//!
//! * pentagon: `lambda_{gh,k}(j) lambda_{g,h}(pi_k j) = lambda_{g,hk}(j) lambda_{h,k}(j)`
//! * unit: `lambda_{g,1}(j) = u(j)` and `lambda_{1,g}(j) = u(pi_g j)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebras::{AlgebraError, StructAlgebra};
use crate::cocycles::{Cocycle, GroupSpec};
use crate::field::{Cyclotomic, Field};
use crate::groups::{compose, invert_permutation, FiniteGroup, GroupError};
use crate::linalg::{coordinates, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwoRepError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("2-representation fails validation: {0}")]
    Invalid(Violation),
    #[error("elements {0} and {1} do not commute")]
    NotCommuting(usize, usize),
    #[error("2-representations of different groups")]
    GroupMismatch,
    #[error("malformed input: {0}")]
    Input(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// One failed coherence identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    NotPermutation { g: usize },
    IdentityNotTrivial,
    NotHomomorphism { g: usize, h: usize },
    ZeroScalar { g: usize, h: usize, j: usize },
    ZeroUnit { j: usize },
    Pentagon { g: usize, h: usize, k: usize, j: usize },
    RightUnit { g: usize, j: usize },
    LeftUnit { g: usize, j: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NotPermutation { g } => write!(f, "pi_{g} is not a permutation"),
            Violation::IdentityNotTrivial => write!(f, "pi_1 is not the identity"),
            Violation::NotHomomorphism { g, h } => write!(f, "pi_{g} pi_{h} != pi_{g}{h}"),
            Violation::ZeroScalar { g, h, j } => write!(f, "lambda_{{{g},{h}}}({j}) = 0"),
            Violation::ZeroUnit { j } => write!(f, "unit_lambda({j}) = 0"),
            Violation::Pentagon { g, h, k, j } => {
                write!(f, "pentagon fails at (g,h,k) = ({g},{h},{k}), j = {j}")
            }
            Violation::RightUnit { g, j } => write!(f, "lambda_{{{g},1}}({j}) != u({j})"),
            Violation::LeftUnit { g, j } => write!(f, "lambda_{{1,{g}}}({j}) != u(pi_{g} {j})"),
        }
    }
}

/// A 2-representation in normal form. Constructed through
/// [`TwoRep::new`], which validates, or [`TwoRep::new_unchecked`], whose
/// result can only be inspected with [`TwoRep::violations`] until
/// [`TwoRep::validated`] succeeds.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoRep<F> {
    group: Arc<FiniteGroup>,
    m: usize,
    perm: Vec<Vec<usize>>,
    /// Index `(g * |G| + h) * m + j`.
    lambda: Vec<F>,
    unit_lambda: Vec<F>,
    valid: bool,
}

impl<F: Field> TwoRep<F> {
    pub fn new(
        group: Arc<FiniteGroup>,
        perm: Vec<Vec<usize>>,
        lambda: Vec<F>,
        unit_lambda: Vec<F>,
    ) -> Result<Self, TwoRepError> {
        Self::new_unchecked(group, perm, lambda, unit_lambda)?.validated()
    }

    /// Checks only shapes.
    pub fn new_unchecked(
        group: Arc<FiniteGroup>,
        perm: Vec<Vec<usize>>,
        lambda: Vec<F>,
        unit_lambda: Vec<F>,
    ) -> Result<Self, TwoRepError> {
        let n = group.order();
        let m = unit_lambda.len();
        if m == 0 {
            return Err(TwoRepError::Shape("m must be positive".into()));
        }
        if perm.len() != n || perm.iter().any(|p| p.len() != m) {
            return Err(TwoRepError::Shape(format!("need {n} permutations of {m} points")));
        }
        if lambda.len() != n * n * m {
            return Err(TwoRepError::Shape(format!("need {} lambda values", n * n * m)));
        }
        Ok(TwoRep {
            group,
            m,
            perm,
            lambda,
            unit_lambda,
            valid: false,
        })
    }

    pub fn validated(mut self) -> Result<Self, TwoRepError> {
        if let Some(v) = self.violations().into_iter().next() {
            return Err(TwoRepError::Invalid(v));
        }
        self.valid = true;
        Ok(self)
    }

    pub fn is_valid(&self) -> bool {
        self.valid
    }

    fn require_valid(&self) -> Result<(), TwoRepError> {
        if self.valid {
            Ok(())
        } else {
            match self.violations().into_iter().next() {
                Some(v) => Err(TwoRepError::Invalid(v)),
                None => Ok(()),
            }
        }
    }

    /// Every failed identity: permutation laws first, then zero scalars,
    /// pentagons in `(g, h, k, j)` order and the unit identities.
    pub fn violations(&self) -> Vec<Violation> {
        let grp = &self.group;
        let mut out = Vec::new();
        for g in grp.elements() {
            if !crate::groups::is_permutation(&self.perm[g]) {
                out.push(Violation::NotPermutation { g });
            }
        }
        if !out.is_empty() {
            return out;
        }
        if self.perm[grp.identity()].iter().enumerate().any(|(i, &x)| i != x) {
            out.push(Violation::IdentityNotTrivial);
        }
        for g in grp.elements() {
            for h in grp.elements() {
                if compose(&self.perm[g], &self.perm[h]) != self.perm[grp.mul(g, h)] {
                    out.push(Violation::NotHomomorphism { g, h });
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        for g in grp.elements() {
            for h in grp.elements() {
                for j in 0..self.m {
                    if self.lambda(g, h, j).is_zero() {
                        out.push(Violation::ZeroScalar { g, h, j });
                    }
                }
            }
        }
        for (j, u) in self.unit_lambda.iter().enumerate() {
            if u.is_zero() {
                out.push(Violation::ZeroUnit { j });
            }
        }
        for g in grp.elements() {
            for h in grp.elements() {
                let gh = grp.mul(g, h);
                for k in grp.elements() {
                    let hk = grp.mul(h, k);
                    for j in 0..self.m {
                        let lhs = self.lambda(gh, k, j).mul_ref(self.lambda(g, h, self.perm[k][j]));
                        let rhs = self.lambda(g, hk, j).mul_ref(self.lambda(h, k, j));
                        if lhs != rhs {
                            out.push(Violation::Pentagon { g, h, k, j });
                        }
                    }
                }
            }
        }
        let e = grp.identity();
        for g in grp.elements() {
            for j in 0..self.m {
                if self.lambda(g, e, j) != &self.unit_lambda[j] {
                    out.push(Violation::RightUnit { g, j });
                }
                if self.lambda(e, g, j) != &self.unit_lambda[self.perm[g][j]] {
                    out.push(Violation::LeftUnit { g, j });
                }
            }
        }
        out
    }

    /// Whether the unit identities hold with the roles of the two
    /// whiskerings exchanged: `lambda_{g,1}(j) = u(pi_g j)` and
    /// `lambda_{1,g}(j) = u(j)`.
    pub fn swapped_unit_holds(&self) -> bool {
        let e = self.group.identity();
        self.group.elements().all(|g| {
            (0..self.m).all(|j| {
                self.lambda(g, e, j) == &self.unit_lambda[self.perm[g][j]]
                    && self.lambda(e, g, j) == &self.unit_lambda[j]
            })
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn perm(&self, g: usize) -> &[usize] {
        &self.perm[g]
    }

    #[inline]
    pub fn lambda(&self, g: usize, h: usize, j: usize) -> &F {
        &self.lambda[(g * self.group.order() + h) * self.m + j]
    }

    pub fn unit_lambda(&self) -> &[F] {
        &self.unit_lambda
    }

    /// Sorted fixed points of `pi_g`, the basis of `X(g) = ttr(rho(g))`.
    pub fn fixed_points(&self, g: usize) -> Vec<usize> {
        (0..self.m).filter(|&j| self.perm[g][j] == j).collect()
    }

    /// Matrix of `psi_s: X(g) -> X(s g s^-1)` in the fixed-point bases.
    ///
    /// The string diagram (unit of `rho(s^-1) -| rho(s)`, whiskering by
    /// `rho(s)` and `rho(s^-1)`, then `phi`) evaluates on the summand `j` of
    /// the target, with `j' = pi_{s^-1}(j)`, to
    /// `lambda_{sg,s^-1}(j) lambda_{s,g}(j') / (u(j) lambda_{s,s^-1}(j))`.
    pub fn psi(&self, s: usize, g: usize) -> Result<Matrix<F>, TwoRepError> {
        self.require_valid()?;
        Ok(self.psi_unchecked(s, g))
    }

    fn psi_unchecked(&self, s: usize, g: usize) -> Matrix<F> {
        let grp = &self.group;
        let t = grp.conjugate(s, g);
        let sinv = grp.inv(s);
        let src = self.fixed_points(g);
        let dst = self.fixed_points(t);
        let sg = grp.mul(s, g);
        let mut m = Matrix::zeros(dst.len(), src.len());
        for (r, &j) in dst.iter().enumerate() {
            let jp = self.perm[sinv][j];
            let c = src.binary_search(&jp).expect("pi_s maps fixed points to fixed points");
            let num = self.lambda(sg, sinv, j).mul_ref(self.lambda(s, g, jp));
            let den = self.unit_lambda[j].mul_ref(self.lambda(s, sinv, j));
            m.set(r, c, num.div_ref(&den).expect("nonzero coherence scalars"));
        }
        m
    }

    pub fn cat_character(&self) -> Result<CatCharacter<F>, TwoRepError> {
        self.require_valid()?;
        let n = self.group.order();
        let bases = self.group.elements().map(|g| self.fixed_points(g)).collect();
        let mut psi = Vec::with_capacity(n * n);
        for s in self.group.elements() {
            for g in self.group.elements() {
                psi.push(self.psi_unchecked(s, g));
            }
        }
        Ok(CatCharacter { order: n, bases, psi })
    }

    /// `chi(g, h) = tr(psi_h on X(g))` for commuting `g, h`.
    pub fn two_character(&self, g: usize, h: usize) -> Result<F, TwoRepError> {
        if !self.group.commute(g, h) {
            return Err(TwoRepError::NotCommuting(g, h));
        }
        Ok(self.psi(h, g)?.trace().expect("square"))
    }

    /// `chi` on all commuting pairs, lexicographically.
    pub fn character_table(&self) -> Result<Vec<((usize, usize), F)>, TwoRepError> {
        self.require_valid()?;
        self.group
            .commuting_pairs()
            .into_iter()
            .map(|(g, h)| Ok(((g, h), self.psi_unchecked(h, g).trace().expect("square"))))
            .collect()
    }

    /// `(1/|G|) sum_{gh = hg} chi(g, h)`.
    pub fn character_sum(&self) -> Result<F, TwoRepError> {
        let total = self
            .character_table()?
            .into_iter()
            .fold(F::zero(), |acc, (_, v)| acc.add_ref(&v));
        Ok(total
            .div_ref(&F::from_int(self.group.order() as i64))
            .expect("nonzero order"))
    }

    /// `R_rho = (+)_g X(g)` with its product, unit and `G`-action.
    pub fn twisted_group_algebra(&self) -> Result<TwistedAlgebra<F>, TwoRepError> {
        self.require_valid()?;
        let grp = &self.group;
        let mut basis = Vec::new();
        let mut index = BTreeMap::new();
        for g in grp.elements() {
            for j in self.fixed_points(g) {
                index.insert((g, j), basis.len());
                basis.push((g, j));
            }
        }
        let d = basis.len();
        let mut unit = vec![F::zero(); d];
        for j in 0..self.m {
            unit[index[&(grp.identity(), j)]] = self.unit_lambda[j].inv().expect("nonzero unit");
        }
        let algebra = StructAlgebra::from_fn(d, unit, |x, y| {
            let ((g, i), (h, j)) = (basis[x], basis[y]);
            if i != j {
                return Vec::new();
            }
            vec![(index[&(grp.mul(g, h), j)], self.lambda(g, h, j).clone())]
        })?;
        let action = grp
            .elements()
            .map(|s| {
                let mut m = Matrix::zeros(d, d);
                for g in grp.elements() {
                    let t = grp.conjugate(s, g);
                    let p = self.psi_unchecked(s, g);
                    let src = self.fixed_points(g);
                    let dst = self.fixed_points(t);
                    for (r, &jt) in dst.iter().enumerate() {
                        for (c, &jg) in src.iter().enumerate() {
                            let v = p.get(r, c);
                            if !v.is_zero() {
                                m.set(index[&(t, jt)], index[&(g, jg)], v.clone());
                            }
                        }
                    }
                }
                m
            })
            .collect();
        Ok(TwistedAlgebra {
            basis,
            algebra,
            action,
        })
    }

    /// Dimension of the `G`-invariants of `R_rho`.
    pub fn invariants_dim(&self) -> Result<usize, TwoRepError> {
        Ok(self.twisted_group_algebra()?.invariant_basis().len())
    }

    /// The composite with a group homomorphism `phi: K -> G` given as a
    /// table of images.
    pub fn pullback(&self, k: Arc<FiniteGroup>, phi: &[usize]) -> Result<TwoRep<F>, TwoRepError> {
        if phi.len() != k.order()
            || k.elements()
                .any(|a| k.elements().any(|b| phi[k.mul(a, b)] != self.group.mul(phi[a], phi[b])))
        {
            return Err(TwoRepError::Input("not a group homomorphism".into()));
        }
        let n = k.order();
        let mut lambda = Vec::with_capacity(n * n * self.m);
        for a in k.elements() {
            for b in k.elements() {
                for j in 0..self.m {
                    lambda.push(self.lambda(phi[a], phi[b], j).clone());
                }
            }
        }
        let perm = k.elements().map(|a| self.perm[phi[a]].clone()).collect();
        let r = TwoRep::new_unchecked(k, perm, lambda, self.unit_lambda.clone())?;
        if self.valid {
            Ok(TwoRep { valid: true, ..r })
        } else {
            r.validated()
        }
    }

    /// Direct sum on `Vect^{m + m'}`.
    pub fn direct_sum(&self, other: &TwoRep<F>) -> Result<TwoRep<F>, TwoRepError> {
        if self.group != other.group {
            return Err(TwoRepError::GroupMismatch);
        }
        let (m1, m2) = (self.m, other.m);
        let perm = self
            .group
            .elements()
            .map(|g| {
                let mut p = self.perm[g].clone();
                p.extend(other.perm[g].iter().map(|x| x + m1));
                p
            })
            .collect();
        let n = self.group.order();
        let mut lambda = Vec::with_capacity(n * n * (m1 + m2));
        for g in 0..n {
            for h in 0..n {
                for j in 0..m1 {
                    lambda.push(self.lambda(g, h, j).clone());
                }
                for j in 0..m2 {
                    lambda.push(other.lambda(g, h, j).clone());
                }
            }
        }
        let mut unit = self.unit_lambda.clone();
        unit.extend(other.unit_lambda.iter().cloned());
        TwoRep::new(self.group.clone(), perm, lambda, unit)
    }

    /// The equivalent 2-representation obtained by rescaling each
    /// `rho(g)` on summand `j` by `beta[g][j]`:
    /// `lambda'_{g,h}(j) = lambda_{g,h}(j) beta_g(pi_h j) beta_h(j) / beta_{gh}(j)`
    /// and `u'(j) = u(j) beta_1(j)`.
    pub fn gauge_transform(&self, beta: &[Vec<F>]) -> Result<TwoRep<F>, TwoRepError> {
        let grp = &self.group;
        if beta.len() != grp.order() || beta.iter().any(|b| b.len() != self.m) {
            return Err(TwoRepError::Shape("one scalar per group element and summand".into()));
        }
        if beta.iter().flatten().any(|b| b.is_zero()) {
            return Err(TwoRepError::Input("gauge scalars must be nonzero".into()));
        }
        let mut lambda = Vec::with_capacity(self.lambda.len());
        for g in grp.elements() {
            for h in grp.elements() {
                let gh = grp.mul(g, h);
                for j in 0..self.m {
                    let num = self
                        .lambda(g, h, j)
                        .mul_ref(&beta[g][self.perm[h][j]])
                        .mul_ref(&beta[h][j]);
                    lambda.push(num.div_ref(&beta[gh][j]).expect("nonzero"));
                }
            }
        }
        let unit = self
            .unit_lambda
            .iter()
            .zip(&beta[grp.identity()])
            .map(|(u, b)| u.mul_ref(b))
            .collect();
        let r = TwoRep::new_unchecked(grp.clone(), self.perm.clone(), lambda, unit)?;
        r.validated()
    }
}

impl<F: Cyclotomic> TwoRep<F> {
    /// `m = 1`, `lambda_{g,h} = c(g,h)`, `u = c(1,1)`.
    pub fn from_cocycle(c: &Cocycle) -> Result<Self, TwoRepError> {
        c.check().map_err(|e| TwoRepError::Input(e.to_string()))?;
        Self::from_group_action_on_set(
            c.group().clone(),
            vec![vec![0]; c.group().order()],
            Some(c),
        )
    }

    /// `pi_g` from a permutation action, with `lambda_{g,h}(j) = c(g,h)`
    /// for an optional cocycle (constant in `j`), else `1`.
    pub fn from_group_action_on_set(
        group: Arc<FiniteGroup>,
        perms: Vec<Vec<usize>>,
        decoration: Option<&Cocycle>,
    ) -> Result<Self, TwoRepError> {
        if !group.is_action(&perms) {
            return Err(TwoRepError::Input("permutations do not form a group action".into()));
        }
        if let Some(c) = decoration {
            if c.group().as_ref() != group.as_ref() {
                return Err(TwoRepError::GroupMismatch);
            }
        }
        let m = perms[0].len();
        let value = |g: usize, h: usize| match decoration {
            Some(c) => F::root_of_unity(c.modulus(), i64::from(c.exp(g, h))),
            None => F::one(),
        };
        let mut lambda = Vec::with_capacity(group.order() * group.order() * m);
        for g in group.elements() {
            for h in group.elements() {
                let v = value(g, h);
                lambda.extend(std::iter::repeat(v).take(m));
            }
        }
        let e = group.identity();
        let unit = vec![value(e, e); m];
        TwoRep::new(group, perms, lambda, unit)
    }

    /// The 2-representation induced from a cocycle on a subgroup: `G` permutes
    /// the left cosets of `H` and `lambda_{g,h}(j) = c(a(g, pi_h j), a(h, j))`
    /// with `a(g, j) = t_{pi_g j}^-1 g t_j` for the coset transversal `t`
    /// (the smallest element of each coset).
    pub fn from_subgroup_cocycle(
        group: Arc<FiniteGroup>,
        subgroup_gens: &[usize],
        c: &Cocycle,
    ) -> Result<Self, TwoRepError> {
        let sub = group.subgroup_generated(subgroup_gens)?;
        if c.group().as_ref() != &sub.group {
            return Err(TwoRepError::GroupMismatch);
        }
        c.check().map_err(|e| TwoRepError::Input(e.to_string()))?;
        let cosets = group.left_cosets(&sub);
        let perms = group.coset_action(&sub);
        let m = cosets.len();
        let transversal: Vec<usize> = cosets.iter().map(|c| c[0]).collect();
        let pos = |x: usize| sub.elements.binary_search(&x).expect("element of the subgroup");
        let a = |g: usize, j: usize| {
            let t = transversal[perms[g][j]];
            pos(group.mul(group.mul(group.inv(t), g), transversal[j]))
        };
        let mut lambda = Vec::with_capacity(group.order() * group.order() * m);
        for g in group.elements() {
            for h in group.elements() {
                for j in 0..m {
                    let e = c.exp(a(g, perms[h][j]), a(h, j));
                    lambda.push(F::root_of_unity(c.modulus(), i64::from(e)));
                }
            }
        }
        let ident = sub.group.identity();
        let u = F::root_of_unity(c.modulus(), i64::from(c.exp(ident, ident)));
        TwoRep::new(group, perms, lambda, vec![u; m])
    }
}

/// `rho box sigma` for the product group, on `Vect^{m m'}` with the pair
/// `(i, p)` at index `i * m' + p`.
pub fn box_rep<F: Field>(rho: &TwoRep<F>, sigma: &TwoRep<F>) -> Result<TwoRep<F>, TwoRepError> {
    rho.require_valid()?;
    sigma.require_valid()?;
    let (g, h) = (&rho.group, &sigma.group);
    let prod = Arc::new(FiniteGroup::direct_product(g, h));
    let (m1, m2) = (rho.m, sigma.m);
    let nh = h.order();
    let perm = prod
        .elements()
        .map(|x| {
            let (a, b) = (x / nh, x % nh);
            (0..m1 * m2)
                .map(|ip| rho.perm[a][ip / m2] * m2 + sigma.perm[b][ip % m2])
                .collect()
        })
        .collect();
    let n = prod.order();
    let mut lambda = Vec::with_capacity(n * n * m1 * m2);
    for x in 0..n {
        for y in 0..n {
            for ip in 0..m1 * m2 {
                lambda.push(
                    rho.lambda(x / nh, y / nh, ip / m2)
                        .mul_ref(sigma.lambda(x % nh, y % nh, ip % m2)),
                );
            }
        }
    }
    let unit = (0..m1 * m2)
        .map(|ip| rho.unit_lambda[ip / m2].mul_ref(&sigma.unit_lambda[ip % m2]))
        .collect();
    let r = TwoRep::new_unchecked(prod, perm, lambda, unit)?;
    Ok(TwoRep { valid: true, ..r })
}

/// `dim Z((rho box sigma)^G)` for the diagonal `G`.
pub fn inner_product_dim<F: Field>(rho: &TwoRep<F>, sigma: &TwoRep<F>) -> Result<usize, TwoRepError> {
    if rho.group != sigma.group {
        return Err(TwoRepError::GroupMismatch);
    }
    let g = rho.group.clone();
    let boxed = box_rep(rho, sigma)?;
    let diagonal: Vec<usize> = g.elements().map(|x| x * g.order() + x).collect();
    boxed.pullback(g, &diagonal)?.invariants_dim()
}

/// `(1/|G|) sum_{gh = hg} chi_rho(g,h) chi_sigma(g,h)`.
pub fn inner_product_character_sum<F: Field>(rho: &TwoRep<F>, sigma: &TwoRep<F>) -> Result<F, TwoRepError> {
    if rho.group != sigma.group {
        return Err(TwoRepError::GroupMismatch);
    }
    let a = rho.character_table()?;
    let b = sigma.character_table()?;
    let total = a
        .iter()
        .zip(&b)
        .fold(F::zero(), |acc, ((_, x), (_, y))| acc.add_ref(&x.mul_ref(y)));
    Ok(total
        .div_ref(&F::from_int(rho.group.order() as i64))
        .expect("nonzero order"))
}

/// All `psi` matrices of a 2-representation.
#[derive(Debug, Clone, PartialEq)]
pub struct CatCharacter<F> {
    order: usize,
    /// Fixed points of `pi_g`, the basis of `X(g)`.
    pub bases: Vec<Vec<usize>>,
    psi: Vec<Matrix<F>>,
}

impl<F: Field> CatCharacter<F> {
    pub fn psi(&self, s: usize, g: usize) -> &Matrix<F> {
        &self.psi[s * self.order + g]
    }

    pub fn dim(&self, g: usize) -> usize {
        self.bases[g].len()
    }
}

/// `R_rho` on the basis `(g, j)` with `pi_g j = j`, ordered by `g` then `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwistedAlgebra<F> {
    pub basis: Vec<(usize, usize)>,
    pub algebra: StructAlgebra<F>,
    /// `action[s]` assembled from the blocks `psi_s: X(g) -> X(s g s^-1)`.
    pub action: Vec<Matrix<F>>,
}

impl<F: Field> TwistedAlgebra<F> {
    /// Basis of the fixed points of all `action[s]`.
    pub fn invariant_basis(&self) -> Vec<Vec<F>> {
        let d = self.algebra.dim();
        let parts: Vec<Matrix<F>> = self
            .action
            .iter()
            .map(|m| m.sub(&Matrix::identity(d)).expect("shape"))
            .collect();
        Matrix::vstack_all(d, &parts).expect("shape").kernel_vectors()
    }

    /// Whether every invariant element commutes with every basis element.
    pub fn invariants_central(&self) -> bool {
        self.invariant_basis().iter().all(|x| self.algebra.is_central(x))
    }

    /// Whether each `action[s]` is a unital algebra automorphism.
    pub fn action_by_automorphisms(&self) -> bool {
        let a = &self.algebra;
        let d = a.dim();
        self.action.iter().all(|m| {
            let cols: Vec<Vec<F>> = (0..d).map(|i| m.col(i)).collect();
            m.apply(a.unit()).expect("shape") == a.unit()
                && (0..d).all(|i| {
                    (0..d).all(|j| {
                        let mut prod = vec![F::zero(); d];
                        for (k, c) in a.product(i, j) {
                            prod[*k] = c.clone();
                        }
                        m.apply(&prod).expect("shape") == a.mul(&cols[i], &cols[j])
                    })
                })
        })
    }

    /// Whether `v` lies in the span of the invariants.
    pub fn is_invariant(&self, v: &[F]) -> bool {
        coordinates(&self.invariant_basis(), v).is_some()
    }
}

/// Wire form. `perm` and `lambda` are keyed by element index (`"g"`) and
/// pair (`"g,h"`); missing `lambda` keys default to 1, a missing `unit_lambda`
/// to all ones.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound(serialize = "F: Serialize", deserialize = "F: Deserialize<'de>"))]
pub struct TwoRepJson<F> {
    pub group: GroupSpec,
    pub m: usize,
    pub perm: BTreeMap<String, Vec<usize>>,
    #[serde(default = "BTreeMap::new")]
    pub lambda: BTreeMap<String, Vec<F>>,
    #[serde(default)]
    pub unit_lambda: Option<Vec<F>>,
}

impl<F: Field> TwoRep<F> {
    /// Parses without validating; use [`TwoRep::violations`] or
    /// [`TwoRep::validated`] next.
    pub fn from_json(j: TwoRepJson<F>) -> Result<Self, TwoRepError> {
        let group = Arc::new(j.group.resolve()?);
        let n = group.order();
        let m = j.m;
        let mut perm = vec![(0..m).collect::<Vec<_>>(); n];
        for (k, p) in j.perm {
            let g: usize = k
                .trim()
                .parse()
                .map_err(|_| TwoRepError::Input(format!("bad perm key {k:?}")))?;
            if g >= n || p.len() != m {
                return Err(TwoRepError::Input(format!("bad perm entry for {k:?}")));
            }
            perm[g] = p;
        }
        let mut lambda = vec![F::one(); n * n * m];
        for (k, vals) in j.lambda {
            let mut it = k.split(',').map(|s| s.trim().parse::<usize>());
            let (Some(Ok(g)), Some(Ok(h)), None) = (it.next(), it.next(), it.next()) else {
                return Err(TwoRepError::Input(format!("bad lambda key {k:?}")));
            };
            if g >= n || h >= n || vals.len() != m {
                return Err(TwoRepError::Input(format!("bad lambda entry for {k:?}")));
            }
            for (jj, v) in vals.into_iter().enumerate() {
                lambda[(g * n + h) * m + jj] = v;
            }
        }
        let unit = j.unit_lambda.unwrap_or_else(|| vec![F::one(); m]);
        Self::new_unchecked(group, perm, lambda, unit)
    }

    pub fn to_json(&self) -> TwoRepJson<F> {
        let n = self.group.order();
        let perm = self
            .group
            .elements()
            .map(|g| (g.to_string(), self.perm[g].clone()))
            .collect();
        let mut lambda = BTreeMap::new();
        for g in 0..n {
            for h in 0..n {
                let vals: Vec<F> = (0..self.m).map(|j| self.lambda(g, h, j).clone()).collect();
                lambda.insert(format!("{g},{h}"), vals);
            }
        }
        TwoRepJson {
            group: GroupSpec::of(&self.group),
            m: self.m,
            perm,
            lambda,
            unit_lambda: Some(self.unit_lambda.clone()),
        }
    }
}

/// Inverse permutation helper re-exported for callers assembling actions.
pub fn inverse_perm(p: &[usize]) -> Vec<usize> {
    invert_permutation(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CycScalar;

    fn klein() -> Cocycle {
        let g = Arc::new(FiniteGroup::by_name("Z2xZ2").unwrap());
        Cocycle::from_fn(g, 2, |x, y| ((x % 2) * (y / 2)) as i64)
    }

    #[test]
    fn cocycle_rep_characters() {
        let c = klein();
        let r = TwoRep::<CycScalar>::from_cocycle(&c).unwrap();
        for (g, h) in c.group().commuting_pairs() {
            assert_eq!(
                r.two_character(g, h).unwrap(),
                c.two_character_closed_form(g, h).unwrap()
            );
        }
        assert_eq!(r.invariants_dim().unwrap(), 1);
        assert_eq!(r.character_sum().unwrap(), CycScalar::from_int(1));
        assert_eq!(inner_product_dim(&r, &r).unwrap(), 4);
    }

    #[test]
    fn perturbed_lambda_is_rejected() {
        let c = klein();
        let r = TwoRep::<CycScalar>::from_cocycle(&c).unwrap();
        let mut j = r.to_json();
        let v = j.lambda.get_mut("1,2").unwrap();
        v[0] = v[0].clone() * CycScalar::root_of_unity(4, 1);
        let bad = TwoRep::from_json(j).unwrap();
        assert!(matches!(bad.violations()[0], Violation::Pentagon { .. }));
        assert!(bad.validated().is_err());
    }

    #[test]
    fn s3_on_three_points() {
        let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
        let (_, perms) =
            FiniteGroup::from_permutation_generators_with_cap(&[vec![1, 0, 2], vec![1, 2, 0]], 120)
                .unwrap();
        let r = TwoRep::<CycScalar>::from_group_action_on_set(s3.clone(), perms.clone(), None).unwrap();
        for g in s3.elements() {
            let fix = perms[g].iter().enumerate().filter(|(i, &x)| *i == x).count();
            assert_eq!(r.two_character(g, 0).unwrap(), CycScalar::from_int(fix as i64));
        }
        assert_eq!(
            CycScalar::from_int(r.invariants_dim().unwrap() as i64),
            r.character_sum().unwrap()
        );
    }
}
