//! `mu_m`-valued 2-cocycles stored as additive exponent tables.
//!
//! Convention: `c(g,h) c(gh,k) = c(h,k) c(g,hk)`, i.e. additively
//! `e[g][h] + e[gh][k] = e[h][k] + e[g][hk] (mod m)`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{CycScalar, Field, Fp, Rational};
use crate::groups::{FiniteGroup, GroupError};
use crate::linalg::Matrix;

/// Largest number of cocycles `CocycleSpace::elements` will list.
pub const ENUMERATION_CAP: u64 = 1 << 20;

/// Largest group accepted by the enumeration routines.
pub const ENUMERATION_ORDER_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CocycleError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("exponent table has shape {rows}x{cols}, group order is {order}")]
    Shape { rows: usize, cols: usize, order: usize },
    #[error("cocycle identity fails at ({0}, {1}, {2})")]
    Invalid(usize, usize, usize),
    #[error("elements {0} and {1} do not commute")]
    NotCommuting(usize, usize),
    #[error("enumeration needs a supported prime modulus (2..=13), got {0}")]
    UnsupportedModulus(u32),
    #[error("group order {0} exceeds the enumeration cap {ENUMERATION_ORDER_CAP}")]
    OrderCap(usize),
    #[error("{0} cocycles exceed the listing cap {ENUMERATION_CAP}")]
    ListingCap(u64),
    #[error("cochain has {got} entries, group order is {order}")]
    CochainLength { got: usize, order: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A 2-cocycle `c(g,h) = zeta_m^{exps[g][h]}`; the identity is not enforced
/// at construction so that invalid data can be inspected with
/// [`Cocycle::violations`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "CocycleJson", try_from = "CocycleJson")]
pub struct Cocycle {
    group: Arc<FiniteGroup>,
    modulus: u32,
    exps: Vec<u32>,
}

/// A group given by builder name or inline table.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Name(String),
    Inline(FiniteGroup),
}

impl GroupSpec {
    pub fn resolve(&self) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupSpec::Name(n) => FiniteGroup::by_name(n),
            GroupSpec::Inline(g) => Ok(g.clone()),
        }
    }

    /// By name when the name rebuilds the same table, inline otherwise.
    pub fn of(group: &FiniteGroup) -> Self {
        match FiniteGroup::by_name(group.name()) {
            Ok(g) if &g == group => GroupSpec::Name(group.name().to_string()),
            _ => GroupSpec::Inline(group.clone()),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CocycleJson {
    pub group: GroupSpec,
    pub modulus: u32,
    pub exps: Vec<Vec<i64>>,
}

impl From<Cocycle> for CocycleJson {
    fn from(c: Cocycle) -> Self {
        let n = c.group.order();
        CocycleJson {
            group: GroupSpec::of(&c.group),
            modulus: c.modulus,
            exps: (0..n)
                .map(|g| (0..n).map(|h| i64::from(c.exp(g, h))).collect())
                .collect(),
        }
    }
}

impl TryFrom<CocycleJson> for Cocycle {
    type Error = CocycleError;
    fn try_from(j: CocycleJson) -> Result<Self, CocycleError> {
        let group = Arc::new(j.group.resolve()?);
        Cocycle::from_table(group, j.modulus, &j.exps)
    }
}

impl Cocycle {
    pub fn zero(group: Arc<FiniteGroup>, modulus: u32) -> Self {
        assert!(modulus > 0);
        let n = group.order();
        Cocycle {
            group,
            modulus,
            exps: vec![0; n * n],
        }
    }

    /// Builds from a table of integer exponents, reduced mod `modulus`.
    pub fn from_table(
        group: Arc<FiniteGroup>,
        modulus: u32,
        exps: &[Vec<i64>],
    ) -> Result<Self, CocycleError> {
        if modulus == 0 {
            return Err(CocycleError::ZeroModulus);
        }
        let n = group.order();
        if exps.len() != n || exps.iter().any(|r| r.len() != n) {
            return Err(CocycleError::Shape {
                rows: exps.len(),
                cols: exps.iter().map(|r| r.len()).find(|&l| l != n).unwrap_or(n),
                order: n,
            });
        }
        let m = i64::from(modulus);
        let flat = exps.iter().flatten().map(|&e| e.rem_euclid(m) as u32).collect();
        Ok(Cocycle {
            group,
            modulus,
            exps: flat,
        })
    }

    pub fn from_fn(
        group: Arc<FiniteGroup>,
        modulus: u32,
        mut f: impl FnMut(usize, usize) -> i64,
    ) -> Self {
        assert!(modulus > 0);
        let n = group.order();
        let m = i64::from(modulus);
        let mut exps = Vec::with_capacity(n * n);
        for g in 0..n {
            for h in 0..n {
                exps.push(f(g, h).rem_euclid(m) as u32);
            }
        }
        Cocycle {
            group,
            modulus,
            exps,
        }
    }

    /// Like [`Cocycle::from_table`] but rejects tables failing the identity.
    pub fn new_valid(
        group: Arc<FiniteGroup>,
        modulus: u32,
        exps: &[Vec<i64>],
    ) -> Result<Self, CocycleError> {
        let c = Self::from_table(group, modulus, exps)?;
        c.check()?;
        Ok(c)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    #[inline]
    pub fn exp(&self, g: usize, h: usize) -> u32 {
        self.exps[g * self.group.order() + h]
    }

    /// `c(g,h)` as an element of `Q(zeta_m)`.
    pub fn value(&self, g: usize, h: usize) -> CycScalar {
        CycScalar::root_of_unity(self.modulus, i64::from(self.exp(g, h)))
    }

    pub fn exps_table(&self) -> Vec<Vec<u32>> {
        self.exps
            .chunks(self.group.order())
            .map(|r| r.to_vec())
            .collect()
    }

    /// All triples `(g, h, k)` at which the cocycle identity fails,
    /// lexicographically.
    pub fn violations(&self) -> Vec<(usize, usize, usize)> {
        let g_ = &self.group;
        let m = self.modulus;
        let mut out = Vec::new();
        for g in g_.elements() {
            for h in g_.elements() {
                let gh = g_.mul(g, h);
                for k in g_.elements() {
                    let lhs = (self.exp(g, h) + self.exp(gh, k)) % m;
                    let rhs = (self.exp(h, k) + self.exp(g, g_.mul(h, k))) % m;
                    if lhs != rhs {
                        out.push((g, h, k));
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    /// First violated triple as an error.
    pub fn check(&self) -> Result<(), CocycleError> {
        match self.violations().first() {
            Some(&(g, h, k)) => Err(CocycleError::Invalid(g, h, k)),
            None => Ok(()),
        }
    }

    /// `delta b (g,h) = b(g) + b(h) - b(gh)`.
    pub fn coboundary(
        group: Arc<FiniteGroup>,
        modulus: u32,
        b: &[i64],
    ) -> Result<Self, CocycleError> {
        if b.len() != group.order() {
            return Err(CocycleError::CochainLength {
                got: b.len(),
                order: group.order(),
            });
        }
        let g_ = group.clone();
        Ok(Self::from_fn(group, modulus, |g, h| b[g] + b[h] - b[g_.mul(g, h)]))
    }

    /// Pointwise product of cocycle values (sum of exponents).
    pub fn product(&self, other: &Cocycle) -> Cocycle {
        assert_eq!(self.group, other.group, "cocycles on different groups");
        assert_eq!(self.modulus, other.modulus, "cocycles with different moduli");
        let m = self.modulus;
        Cocycle {
            group: self.group.clone(),
            modulus: m,
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| (a + b) % m)
                .collect(),
        }
    }

    /// The 1-cochain `b(g) = c(1, g)` whose coboundary is removed by
    /// [`Cocycle::normalize`]. For a cocycle `c(1, g)` is the constant
    /// `c(1, 1)`.
    pub fn normalizing_cochain(&self) -> Vec<i64> {
        let e = self.group.identity();
        self.group
            .elements()
            .map(|g| i64::from(self.exp(e, g)))
            .collect()
    }

    /// Cohomologous cocycle with `c(1, g) = c(g, 1) = 1`.
    pub fn normalize(&self) -> Cocycle {
        let b: Vec<i64> = self.normalizing_cochain().iter().map(|x| -x).collect();
        let db = Self::coboundary(self.group.clone(), self.modulus, &b).expect("cochain length");
        self.product(&db)
    }

    pub fn is_normalized(&self) -> bool {
        let e = self.group.identity();
        self.group
            .elements()
            .all(|g| self.exp(e, g) == 0 && self.exp(g, e) == 0)
    }

    /// `c^op(g, h) = c(h, g)`, a cocycle on the opposite group.
    pub fn opposite(&self) -> Cocycle {
        let op = Arc::new(self.group.opposite());
        let n = self.group.order();
        Cocycle {
            group: op,
            modulus: self.modulus,
            exps: (0..n * n).map(|i| self.exp(i % n, i / n)).collect(),
        }
    }

    /// The same cocycle with values read in `mu_{k m}`.
    pub fn inflate(&self, k: u32) -> Cocycle {
        Cocycle {
            group: self.group.clone(),
            modulus: self.modulus * k,
            exps: self.exps.iter().map(|e| e * k).collect(),
        }
    }

    /// Per-class regularity: `[g]` is regular iff `c(g,h) = c(h,g)` for all
    /// `h` centralizing the representative `g`.
    pub fn regular_classes(&self) -> RegularityReport {
        let conj = self.group.conjugacy();
        let classes = conj
            .classes
            .iter()
            .map(|class| {
                let g = class[0];
                let witness = conj.centralizers[g]
                    .iter()
                    .find(|&&h| self.exp(g, h) != self.exp(h, g))
                    .map(|&h| (g, h));
                ClassRegularity {
                    representative: g,
                    size: class.len(),
                    regular: witness.is_none(),
                    witness,
                }
            })
            .collect();
        RegularityReport { classes }
    }

    /// `chi(g, h) = c(h, g) / c(g, h)` for commuting `g, h`.
    pub fn two_character_closed_form(&self, g: usize, h: usize) -> Result<CycScalar, CocycleError> {
        if !self.group.commute(g, h) {
            return Err(CocycleError::NotCommuting(g, h));
        }
        let e = i64::from(self.exp(h, g)) - i64::from(self.exp(g, h));
        Ok(CycScalar::root_of_unity(self.modulus, e))
    }

    /// `(1/|G|) sum_{gh = hg} c(h,g)/c(g,h)`.
    pub fn closed_form_character_sum(&self) -> CycScalar {
        let mut acc = CycScalar::from_int(0);
        for (g, h) in self.group.commuting_pairs() {
            acc = acc.add_ref(&self.two_character_closed_form(g, h).expect("commuting pair"));
        }
        let n = CycScalar::from_int(self.group.order() as i64);
        acc.div_ref(&n).expect("nonzero order")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRegularity {
    pub representative: usize,
    pub size: usize,
    pub regular: bool,
    /// A centralizing pair `(g, h)` with `c(g,h) != c(h,g)`.
    pub witness: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub classes: Vec<ClassRegularity>,
}

impl RegularityReport {
    pub fn regular_count(&self) -> usize {
        self.classes.iter().filter(|c| c.regular).count()
    }
}

/// The space `Z^2(G, Z/p)` with a deterministic basis.
#[derive(Debug, Clone)]
pub struct CocycleSpace {
    pub group: Arc<FiniteGroup>,
    pub modulus: u32,
    /// Kernel basis of the cocycle constraints, one vector per free column of
    /// the reduced system in increasing column order.
    pub basis: Vec<Cocycle>,
    pub dim_coboundaries: usize,
}

impl CocycleSpace {
    pub fn dim_cocycles(&self) -> usize {
        self.basis.len()
    }

    /// `p^(dim Z - dim B)`.
    pub fn class_count(&self) -> u64 {
        u64::from(self.modulus).pow((self.basis.len() - self.dim_coboundaries) as u32)
    }

    pub fn len(&self) -> u64 {
        u64::from(self.modulus).saturating_pow(self.basis.len() as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Every element of `Z^2`, in the order of base-`p` counting with the
    /// first basis vector as the least significant digit.
    pub fn elements(&self) -> Result<impl Iterator<Item = Cocycle> + '_, CocycleError> {
        let total = self.len();
        if total > ENUMERATION_CAP {
            return Err(CocycleError::ListingCap(total));
        }
        let p = u64::from(self.modulus);
        Ok((0..total).map(move |mut idx| {
            let mut c = Cocycle::zero(self.group.clone(), self.modulus);
            for b in &self.basis {
                let digit = idx % p;
                idx /= p;
                for _ in 0..digit {
                    c = c.product(b);
                }
            }
            c
        }))
    }
}

/// Basis of all cocycles over `Z/p` plus the rank of the coboundaries.
pub fn enumerate_cocycles(group: Arc<FiniteGroup>, p: u32) -> Result<CocycleSpace, CocycleError> {
    if group.order() > ENUMERATION_ORDER_CAP {
        return Err(CocycleError::OrderCap(group.order()));
    }
    let (kernel, dim_b) = match p {
        2 => solve_mod::<2>(&group),
        3 => solve_mod::<3>(&group),
        5 => solve_mod::<5>(&group),
        7 => solve_mod::<7>(&group),
        11 => solve_mod::<11>(&group),
        13 => solve_mod::<13>(&group),
        _ => return Err(CocycleError::UnsupportedModulus(p)),
    };
    let n = group.order();
    let basis = kernel
        .into_iter()
        .map(|v| Cocycle::from_fn(group.clone(), p, |g, h| v[g * n + h] as i64))
        .collect();
    Ok(CocycleSpace {
        group,
        modulus: p,
        basis,
        dim_coboundaries: dim_b,
    })
}

/// `(dim Z^2, dim B^2, number of classes)` over `Z/p`.
pub fn cohomology_class_count(
    group: Arc<FiniteGroup>,
    p: u32,
) -> Result<(usize, usize, u64), CocycleError> {
    let s = enumerate_cocycles(group, p)?;
    Ok((s.dim_cocycles(), s.dim_coboundaries, s.class_count()))
}

fn solve_mod<const P: u64>(group: &FiniteGroup) -> (Vec<Vec<u64>>, usize) {
    let n = group.order();
    let mut rows = Vec::with_capacity(n * n * n);
    for g in 0..n {
        for h in 0..n {
            let gh = group.mul(g, h);
            for k in 0..n {
                let hk = group.mul(h, k);
                let mut row = vec![Fp::<P>::new(0); n * n];
                row[g * n + h] = row[g * n + h] + Fp::new(1);
                row[gh * n + k] = row[gh * n + k] + Fp::new(1);
                row[h * n + k] = row[h * n + k] - Fp::new(1);
                row[g * n + hk] = row[g * n + hk] - Fp::new(1);
                rows.push(row);
            }
        }
    }
    let constraints = Matrix::from_rows(rows);
    let kernel = constraints
        .kernel_vectors()
        .into_iter()
        .map(|v| v.into_iter().map(|x| x.value()).collect())
        .collect();
    // Coboundary map Z^G -> Z^{G x G}, one column per basis cochain.
    let delta = Matrix::from_fn(n * n, n, |gh, x| {
        let (g, h) = (gh / n, gh % n);
        let mut v = Fp::<P>::new(0);
        if g == x {
            v = v + Fp::new(1);
        }
        if h == x {
            v = v + Fp::new(1);
        }
        if group.mul(g, h) == x {
            v = v - Fp::new(1);
        }
        v
    });
    (kernel, delta.rank())
}

/// Rational value of a cyclotomic scalar known to be rational.
pub fn as_rational(x: &CycScalar) -> Option<Rational> {
    x.to_rational()
}
