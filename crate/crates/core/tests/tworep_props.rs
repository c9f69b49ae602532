use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twotrace::algebras::count_simples;
use twotrace::cocycles::{enumerate_cocycles, Cocycle};
use twotrace::field::{CycScalar, Field};
use twotrace::groups::FiniteGroup;
use twotrace::samples::{random_rep, REP_GROUPS};
use twotrace::tworep::{box_rep, inner_product_character_sum, inner_product_dim, TwoRep};

fn rep_from_seed(group: usize, seed: u64) -> (String, TwoRep<CycScalar>) {
    let g = Arc::new(FiniteGroup::by_name(REP_GROUPS[group]).unwrap());
    random_rep(&mut ChaCha8Rng::seed_from_u64(seed), &g, 4)
}

fn klein() -> Cocycle {
    let g = Arc::new(FiniteGroup::by_name("Z2xZ2").unwrap());
    Cocycle::from_fn(g, 2, |x, y| ((x % 2) * (y / 2)) as i64)
}

fn int(n: i64) -> CycScalar {
    CycScalar::from_int(n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn psi_is_a_functor(group in 0usize..REP_GROUPS.len(), seed in any::<u64>()) {
        let (label, rep) = rep_from_seed(group, seed);
        let g = rep.group().clone();
        let e = g.identity();
        for x in g.elements() {
            let p1 = rep.psi(e, x).unwrap();
            prop_assert!(p1.is_identity(), "{}", label);
            for t in g.elements() {
                let pt = rep.psi(t, x).unwrap();
                prop_assert!(pt.inverse().unwrap().is_some());
                for s in g.elements() {
                    let lhs = &rep.psi(s, g.conjugate(t, x)).unwrap() * &pt;
                    prop_assert_eq!(lhs, rep.psi(g.mul(s, t), x).unwrap(), "{}", label);
                }
            }
        }
    }

    #[test]
    fn character_is_a_class_function(group in 0usize..REP_GROUPS.len(), seed in any::<u64>()) {
        let (label, rep) = rep_from_seed(group, seed);
        let g = rep.group().clone();
        for (x, y) in g.commuting_pairs() {
            let chi = rep.two_character(x, y).unwrap();
            if y == g.identity() {
                prop_assert_eq!(&chi, &int(rep.fixed_points(x).len() as i64));
            }
            for s in g.elements() {
                let si = g.inv(s);
                let conj = |a| g.mul(g.mul(si, a), s);
                prop_assert_eq!(&rep.two_character(conj(x), conj(y)).unwrap(), &chi, "{}", label);
            }
        }
    }

    #[test]
    fn invariants_match_character_sum(group in 0usize..REP_GROUPS.len(), seed in any::<u64>()) {
        let (label, rep) = rep_from_seed(group, seed);
        let r = rep.twisted_group_algebra().unwrap();
        let dim = r.invariant_basis().len();
        prop_assert_eq!(int(dim as i64), rep.character_sum().unwrap(), "{}", label);
        prop_assert!(r.invariants_central(), "{}", label);
        prop_assert!(r.action_by_automorphisms(), "{}", label);
        prop_assert!(r.algebra.check().is_ok());
    }

    #[test]
    fn box_product_characters_multiply(
        (g1, s1) in (0usize..5, any::<u64>()),
        (g2, s2) in (0usize..5, any::<u64>()),
    ) {
        let (_, rho) = rep_from_seed(g1, s1);
        let (_, sigma) = rep_from_seed(g2, s2);
        let b = box_rep(&rho, &sigma).unwrap();
        prop_assert!(b.violations().is_empty());
        let nh = sigma.group().order();
        for (x, y) in b.group().commuting_pairs() {
            let expected = rho.two_character(x / nh, y / nh).unwrap() * sigma.two_character(x % nh, y % nh).unwrap();
            prop_assert_eq!(b.two_character(x, y).unwrap(), expected);
            if y == b.group().identity() {
                prop_assert_eq!(
                    b.fixed_points(x).len(),
                    rho.fixed_points(x / nh).len() * sigma.fixed_points(x % nh).len()
                );
            }
        }
    }

    #[test]
    fn inner_product_matches_character_formula(group in 0usize..6, s1 in any::<u64>(), s2 in any::<u64>()) {
        let (_, rho) = rep_from_seed(group, s1);
        let (_, sigma) = rep_from_seed(group, s2);
        let d = inner_product_dim(&rho, &sigma).unwrap();
        prop_assert_eq!(int(d as i64), inner_product_character_sum(&rho, &sigma).unwrap());
    }

    #[test]
    fn gauge_preserves_characters(group in 0usize..REP_GROUPS.len(), seed in any::<u64>(), k in 1i64..4) {
        let (_, rep) = rep_from_seed(group, seed);
        let n = rep.group().order();
        let beta: Vec<Vec<CycScalar>> = (0..n)
            .map(|g| (0..rep.m()).map(|j| CycScalar::root_of_unity(6, k * (g + 2 * j) as i64) * int(k)).collect())
            .collect();
        let gauged = rep.gauge_transform(&beta).unwrap();
        prop_assert_eq!(gauged.character_table().unwrap(), rep.character_table().unwrap());
    }

    #[test]
    fn associativity_matches_pentagon_for_one_object(
        group in 1usize..REP_GROUPS.len(),
        seed in any::<u64>(),
        slot in any::<prop::sample::Index>(),
        k in 1i64..4,
    ) {
        let g = Arc::new(FiniteGroup::by_name(REP_GROUPS[group]).unwrap());
        let space = enumerate_cocycles(g.clone(), 2).unwrap();
        let c = space.elements().unwrap().nth((seed % space.len()) as usize).unwrap();
        let rep = TwoRep::<CycScalar>::from_cocycle(&c).unwrap();
        let mut json = rep.to_json();
        let keys: Vec<String> = json.lambda.keys().cloned().collect();
        let key = slot.get(&keys).clone();
        let v = json.lambda.get_mut(&key).unwrap();
        v[0] = v[0].clone() * CycScalar::root_of_unity(4, k);
        let bad = TwoRep::from_json(json).unwrap();
        let pentagon_ok = !bad.violations().iter().any(|v| matches!(v, twotrace::tworep::Violation::Pentagon { .. }));
        // Associativity of b_x b_y = lambda(x,y) b_xy, scanned directly.
        let assoc_ok = g.elements().all(|x| g.elements().all(|y| g.elements().all(|z| {
            bad.lambda(x, y, 0).mul_ref(bad.lambda(g.mul(x, y), z, 0))
                == bad.lambda(y, z, 0).mul_ref(bad.lambda(x, g.mul(y, z), 0))
        })));
        prop_assert_eq!(pentagon_ok, assoc_ok);
    }
}

#[test]
fn cocycle_reps_match_closed_forms() {
    let cases = [("Z4", 2), ("Z4", 3), ("Z2xZ2", 2), ("Z2xZ2", 3), ("S3", 2), ("S3", 3), ("D4", 2), ("Q8", 2)];
    for (name, p) in cases {
        let g = Arc::new(FiniteGroup::by_name(name).unwrap());
        {
            let space = enumerate_cocycles(g.clone(), p).unwrap();
            for c in space.elements().unwrap() {
                let rep = TwoRep::<CycScalar>::from_cocycle(&c).unwrap();
                for (x, y) in g.commuting_pairs() {
                    assert_eq!(
                        rep.two_character(x, y).unwrap(),
                        c.two_character_closed_form(x, y).unwrap(),
                        "{name} mod {p}"
                    );
                }
                let r = rep.twisted_group_algebra().unwrap();
                let center = r.algebra.center().len();
                let regular = c.regular_classes().regular_count();
                assert_eq!(center, regular, "{name} mod {p}");
                assert_eq!(count_simples(&r.algebra).simples, Some(regular));
                assert_eq!(rep.character_sum().unwrap(), int(regular as i64));
                // b_g b_h = c(g,h) b_gh on the basis (g, 0).
                for x in g.elements() {
                    for y in g.elements() {
                        assert_eq!(r.algebra.product(x, y), &[(g.mul(x, y), c.value(x, y))][..]);
                    }
                }
            }
        }
    }
}

#[test]
fn trivial_and_klein_values() {
    for name in REP_GROUPS {
        let g = Arc::new(FiniteGroup::by_name(name).unwrap());
        let triv = TwoRep::<CycScalar>::from_cocycle(&Cocycle::zero(g.clone(), 1)).unwrap();
        let classes = g.conjugacy().num_classes();
        assert_eq!(triv.invariants_dim().unwrap(), classes);
        assert_eq!(inner_product_dim(&triv, &triv).unwrap(), classes);
    }
    let rho = TwoRep::<CycScalar>::from_cocycle(&klein()).unwrap();
    assert_eq!(rho.invariants_dim().unwrap(), 1);
    assert_eq!(inner_product_dim(&rho, &rho).unwrap(), 4);
    let triv = TwoRep::<CycScalar>::from_cocycle(&Cocycle::zero(klein().group().clone(), 1)).unwrap();
    assert_eq!(inner_product_dim(&rho, &triv).unwrap(), rho.invariants_dim().unwrap());
}

#[test]
fn left_translation_gives_functions_on_the_group() {
    for name in ["Z3", "S3", "Q8"] {
        let g = Arc::new(FiniteGroup::by_name(name).unwrap());
        let perms: Vec<Vec<usize>> = g.elements().map(|x| g.elements().map(|y| g.mul(x, y)).collect()).collect();
        let rep = TwoRep::<CycScalar>::from_group_action_on_set(g.clone(), perms, None).unwrap();
        for x in g.elements() {
            let expected = if x == g.identity() { g.order() } else { 0 };
            assert_eq!(rep.fixed_points(x).len(), expected);
        }
        let r = rep.twisted_group_algebra().unwrap();
        assert!(r.basis.iter().all(|&(x, _)| x == g.identity()));
        assert!(r.algebra.is_commutative());
        assert_eq!(count_simples(&r.algebra).simples, Some(g.order()));
        // G permutes the idempotents transitively, so only their sum is invariant.
        assert_eq!(r.invariant_basis().len(), 1);
    }
}

#[test]
fn s3_on_three_points_counts_fixed_points() {
    let (g, perms) =
        FiniteGroup::from_permutation_generators(&[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
    let g = Arc::new(g);
    let rep = TwoRep::<CycScalar>::from_group_action_on_set(g.clone(), perms.clone(), None).unwrap();
    for x in g.elements() {
        let fix = (0..3).filter(|&i| perms[x][i] == i).count();
        assert_eq!(rep.two_character(x, g.identity()).unwrap(), int(fix as i64));
    }
    // (1/|G|) sum over commuting pairs of the common fixed points.
    let common: usize = g
        .commuting_pairs()
        .into_iter()
        .map(|(x, y)| (0..3).filter(|&i| perms[x][i] == i && perms[y][i] == i).count())
        .sum();
    assert_eq!(common, 12);
    assert_eq!(rep.invariants_dim().unwrap(), common / g.order());
}

/// The unit identities were fixed as `lambda_{g,1}(j) = u(j)` and
/// `lambda_{1,g}(j) = u(pi_g j)`. The exchanged orientation can only hold
/// when `u` is constant along orbits; this scan flags every generated
/// instance where the two orientations disagree.
#[test]
fn unit_orientation_scan() {
    let mut flagged = Vec::new();
    for (label, rep) in twotrace::samples::rep_family(11, 64, 4) {
        let g = rep.group();
        let u = rep.unit_lambda();
        let orbit_constant = g.elements().all(|x| (0..rep.m()).all(|j| u[rep.perm(x)[j]] == u[j]));
        assert_eq!(rep.swapped_unit_holds(), orbit_constant, "{label}");
        if !orbit_constant {
            flagged.push(label);
        }
    }
    println!("instances where the two unit orientations disagree: {}", flagged.len());
    for l in &flagged {
        println!("  {l}");
    }
}

#[test]
fn perturbation_reports_a_pentagon_witness() {
    let rep = TwoRep::<CycScalar>::from_cocycle(&klein()).unwrap();
    let mut json = rep.to_json();
    let v = json.lambda.get_mut("1,2").unwrap();
    v[0] = v[0].clone() * CycScalar::root_of_unity(4, 1);
    let bad = TwoRep::from_json(json).unwrap();
    let first = bad.violations().into_iter().next().unwrap();
    assert!(matches!(first, twotrace::tworep::Violation::Pentagon { .. }));
    assert!(bad.psi(0, 0).is_err());
}
