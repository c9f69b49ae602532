//! Seeded generators of small test instances: 2-representations,
//! bimodule pairs and module pairs for the adjunction check.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebras::{crossed_product, fixtures, twisted_bimodule, Bimodule, GroupAction, LeftModule, StructAlgebra};
use crate::cocycles::{enumerate_cocycles, Cocycle};
use crate::field::{CycScalar, Field};
use crate::groups::FiniteGroup;
use crate::linalg::Matrix;
use crate::tworep::TwoRep;

/// Groups of order at most 8 used for generated 2-representations.
pub const REP_GROUPS: [&str; 8] = ["trivial", "Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8"];

fn random_cocycle(rng: &mut ChaCha8Rng, group: &Arc<FiniteGroup>) -> Cocycle {
    let p = if rng.gen_bool(0.5) { 2 } else { 3 };
    let space = enumerate_cocycles(group.clone(), p).expect("small group");
    let mut c = Cocycle::zero(group.clone(), p);
    for b in &space.basis {
        for _ in 0..rng.gen_range(0..p) {
            c = c.product(b);
        }
    }
    c
}

/// A random subgroup of index at most `max_index`, as generators.
fn random_subgroup(rng: &mut ChaCha8Rng, group: &FiniteGroup, max_index: usize) -> Vec<usize> {
    let elems: Vec<usize> = group.elements().collect();
    loop {
        let k = rng.gen_range(1..=2);
        let gens: Vec<usize> = (0..k).map(|_| *elems.choose(rng).expect("nonempty")).collect();
        let sub = group.subgroup_generated(&gens).expect("valid elements");
        if group.order() / sub.elements.len() <= max_index {
            return gens;
        }
    }
}

fn random_gauge(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Vec<Vec<CycScalar>> {
    (0..n)
        .map(|_| {
            (0..m)
                .map(|_| {
                    let z = CycScalar::root_of_unity(4, rng.gen_range(0..4));
                    z * CycScalar::from_int(rng.gen_range(1..=2))
                })
                .collect()
        })
        .collect()
}

/// One random valid 2-representation of `group` on at most `max_m` objects,
/// with a short description of how it was built.
pub fn random_rep(rng: &mut ChaCha8Rng, group: &Arc<FiniteGroup>, max_m: usize) -> (String, TwoRep<CycScalar>) {
    let (mut label, mut rep) = match rng.gen_range(0..3) {
        0 => {
            let c = random_cocycle(rng, group);
            (
                format!("cocycle mod {}", c.modulus()),
                TwoRep::from_cocycle(&c).expect("valid cocycle"),
            )
        }
        1 => {
            let gens = random_subgroup(rng, group, max_m);
            let sub = group.subgroup_generated(&gens).expect("valid");
            let perms = group.coset_action(&sub);
            let deco = rng.gen_bool(0.5).then(|| random_cocycle(rng, group));
            let label = format!(
                "cosets of {} elements{}",
                sub.elements.len(),
                if deco.is_some() { ", decorated" } else { "" }
            );
            let rep = TwoRep::from_group_action_on_set(group.clone(), perms, deco.as_ref()).expect("valid");
            (label, rep)
        }
        _ => {
            let gens = random_subgroup(rng, group, max_m);
            let sub = group.subgroup_generated(&gens).expect("valid");
            let c = random_cocycle(rng, &Arc::new(sub.group.clone()));
            let rep = TwoRep::from_subgroup_cocycle(group.clone(), &gens, &c).expect("valid");
            (format!("induced from {} elements", sub.elements.len()), rep)
        }
    };
    if rep.m() < max_m && rng.gen_bool(0.3) {
        let (l2, other) = random_rep(rng, group, max_m - rep.m());
        rep = rep.direct_sum(&other).expect("same group");
        label = format!("{label} + {l2}");
    }
    if rng.gen_bool(0.5) {
        let beta = random_gauge(rng, group.order(), rep.m());
        rep = rep.gauge_transform(&beta).expect("nonzero gauge");
        label.push_str(", gauged");
    }
    (label, rep)
}

/// `count` seeded 2-representations cycling through [`REP_GROUPS`], with
/// `m <= max_m`.
pub fn rep_family(seed: u64, count: usize, max_m: usize) -> Vec<(String, TwoRep<CycScalar>)> {
    rep_family_on(seed, count, max_m, &REP_GROUPS)
}

/// Like [`rep_family`] over the named groups.
pub fn rep_family_on(seed: u64, count: usize, max_m: usize, names: &[&str]) -> Vec<(String, TwoRep<CycScalar>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let groups: Vec<Arc<FiniteGroup>> = names
        .iter()
        .map(|n| Arc::new(FiniteGroup::by_name(n).expect("known name")))
        .collect();
    (0..count)
        .map(|i| {
            let g = &groups[i % groups.len()];
            let (label, rep) = random_rep(&mut rng, g, max_m);
            (format!("{} {}: {label}", g.name(), i), rep)
        })
        .collect()
}

fn cyclic_shift_action<F: Field>(n: usize) -> GroupAction<F> {
    let group = Arc::new(FiniteGroup::cyclic(n));
    let algebra = Arc::new(StructAlgebra::diagonal(n));
    let autos = group
        .elements()
        .map(|g| Matrix::from_fn(n, n, |r, c| if r == (c + g) % n { F::one() } else { F::zero() }))
        .collect();
    GroupAction::new(group, algebra, autos).expect("shift action")
}

/// Algebras with group actions, `dim A * |G| <= 12`.
pub fn action_pool<F: Field>() -> Vec<(String, GroupAction<F>)> {
    let mut out: Vec<(String, GroupAction<F>)> = fixtures::center_suite()
        .into_iter()
        .map(|(n, a)| (n.to_string(), a))
        .collect();
    let k = Arc::new(StructAlgebra::diagonal(1));
    for name in ["Z2", "Z3", "S3", "Q8"] {
        let g = Arc::new(FiniteGroup::by_name(name).expect("known"));
        out.push((format!("k with trivial {name}"), GroupAction::trivial(g, k.clone())));
    }
    out.push((
        "k[x]/(x^2) with trivial Z2".into(),
        GroupAction::trivial(
            Arc::new(FiniteGroup::cyclic(2)),
            Arc::new(StructAlgebra::truncated_polynomial(2)),
        ),
    ));
    out.push(("k^3 with shifting Z3".into(), cyclic_shift_action(3)));
    out.push((
        "k x k with trivial S3".into(),
        GroupAction::trivial(
            Arc::new(FiniteGroup::symmetric(3).expect("small")),
            Arc::new(StructAlgebra::diagonal(2)),
        ),
    ));
    out
}

fn random_vector<F: Field>(rng: &mut ChaCha8Rng, n: usize) -> Vec<F> {
    loop {
        let v: Vec<F> = (0..n).map(|_| F::from_int(rng.gen_range(-2..=2))).collect();
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

/// A random cyclic left ideal of `a`, or the regular module.
pub fn random_module<F: Field>(rng: &mut ChaCha8Rng, a: &StructAlgebra<F>) -> LeftModule<F> {
    if rng.gen_bool(0.25) {
        LeftModule::regular(a)
    } else {
        LeftModule::cyclic_submodule(a, &random_vector(rng, a.dim()))
    }
}

/// Seeded `(A, G, M, N)` instances with `M` an `A`-module and `N` an
/// `A x| G`-module.
pub fn adjunction_instances<F: Field>(
    seed: u64,
    count: usize,
) -> Vec<(String, GroupAction<F>, LeftModule<F>, LeftModule<F>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = action_pool::<F>();
    (0..count)
        .map(|i| {
            let (name, action) = pool[i % pool.len()].clone();
            let m = random_module(&mut rng, action.algebra());
            let n = random_module(&mut rng, &crossed_product(&action));
            (format!("{name} #{i}"), action, m, n)
        })
        .collect()
}

/// Seeded module pairs `(M, N)` for one fixed action.
pub fn module_pairs<F: Field>(action: &GroupAction<F>, seed: u64, count: usize) -> Vec<(LeftModule<F>, LeftModule<F>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let crossed = crossed_product(action);
    (0..count)
        .map(|_| {
            let m = random_module(&mut rng, action.algebra());
            (m, random_module(&mut rng, &crossed))
        })
        .collect()
}

/// Bimodules used for the degree-zero Kunneth comparison.
pub fn bimodule_pool<F: Field>() -> Vec<(String, Bimodule<F>)> {
    let mut out = Vec::new();
    let algebras: Vec<(&str, StructAlgebra<F>)> = vec![
        ("k", StructAlgebra::diagonal(1)),
        ("k x k", StructAlgebra::diagonal(2)),
        ("k[x]/(x^2)", StructAlgebra::truncated_polynomial(2)),
        ("k[Z2]", StructAlgebra::group_algebra(&FiniteGroup::cyclic(2))),
        ("k[Z3]", StructAlgebra::group_algebra(&FiniteGroup::cyclic(3))),
        ("M2(k)", StructAlgebra::matrix_algebra(2)),
    ];
    for (name, a) in algebras {
        let a = Arc::new(a);
        let reg = Bimodule::regular(a.clone());
        out.push((format!("{name} regular"), reg.clone()));
        out.push((format!("{name} regular twice"), reg.direct_sum(&reg)));
    }
    for (name, action) in fixtures::center_suite::<F>() {
        out.push((format!("{name}, twisted by the generator"), twisted_bimodule(&action, 1)));
    }
    out
}

/// All ordered pairs from [`bimodule_pool`] with `dim A * dim B <= max_product`.
pub fn bimodule_pairs<F: Field>(max_product: usize) -> Vec<(String, Bimodule<F>, Bimodule<F>)> {
    let pool = bimodule_pool::<F>();
    let mut out = Vec::new();
    for (n1, m) in &pool {
        for (n2, n) in &pool {
            if m.algebra().dim() * n.algebra().dim() <= max_product {
                out.push((format!("{n1} | {n2}"), m.clone(), n.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_is_valid_and_reproducible() {
        let a = rep_family(7, 24, 4);
        let b = rep_family(7, 24, 4);
        for ((la, ra), (lb, rb)) in a.iter().zip(&b) {
            assert_eq!(la, lb);
            assert_eq!(ra, rb);
            assert!(ra.is_valid() && ra.m() <= 4, "{la}");
        }
    }
}
