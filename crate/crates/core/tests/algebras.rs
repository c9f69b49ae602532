use std::sync::Arc;

use proptest::prelude::*;
use twotrace::algebras::{
    bimodule_center, center_decomposition, count_simples, crossed_product, fixtures, induction_adjunction_check,
    kunneth_center, module_hom_dim, twisted_bimodule, Bimodule, GroupAction, LeftModule, StructAlgebra,
};
use twotrace::cocycles::enumerate_cocycles;
use twotrace::field::{CycScalar, Field, Rational};
use twotrace::groups::FiniteGroup;
use twotrace::linalg::Matrix;
use twotrace::samples::{action_pool, adjunction_instances, bimodule_pairs};

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn group(name: &str) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::by_name(name).unwrap())
}

fn perm_matrix(perm: &[usize]) -> Matrix<Rational> {
    Matrix::from_fn(perm.len(), perm.len(), |r, c| if perm[c] == r { q(1) } else { q(0) })
}

/// `Z/2` acting on `k[H]` through the group automorphism `phi`.
fn automorphism_action(h: &FiniteGroup, phi: &[usize]) -> GroupAction<Rational> {
    let a = Arc::new(StructAlgebra::group_algebra(h));
    let n = h.order();
    GroupAction::new(group("Z2"), a, vec![Matrix::identity(n), perm_matrix(phi)]).unwrap()
}

/// Orbits of `x -> h x phi(h)^-1`, counted by union-find.
fn twisted_class_count(h: &FiniteGroup, phi: &[usize]) -> usize {
    let n = h.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for s in 0..n {
        for x in 0..n {
            let y = h.mul(h.mul(s, x), h.inv(phi[s]));
            let (a, b) = (find(&mut parent, x), find(&mut parent, y));
            parent[a] = b;
        }
    }
    (0..n).filter(|&x| find(&mut parent, x) == x).count()
}

#[test]
fn centers_of_standard_algebras() {
    let s3 = FiniteGroup::symmetric(3).unwrap();
    assert_eq!(StructAlgebra::<Rational>::group_algebra(&s3).center().len(), 3);
    assert_eq!(StructAlgebra::<Rational>::matrix_algebra(2).center().len(), 1);
    let dual = StructAlgebra::<Rational>::truncated_polynomial(3);
    assert!(dual.is_commutative());
    assert_eq!(dual.center().len(), 3);
    assert_eq!(count_simples(&StructAlgebra::<Rational>::group_algebra(&s3)).simples, Some(3));
    assert_eq!(count_simples(&StructAlgebra::<Rational>::diagonal(4)).simples, Some(4));
    assert_eq!(count_simples(&dual).simples, None);
}

#[test]
fn center_of_bimodule_over_k_times_k_counts_diagonal_pieces() {
    // Basis vector r lies in e_a M e_b for (a, b) = sides[r]; the center is
    // the sum of the e_i M e_i, i.e. the number of diagonal pieces.
    let a = Arc::new(StructAlgebra::<Rational>::diagonal(2));
    let sides = [(0, 0), (0, 1), (1, 1), (1, 1), (1, 0)];
    let diag = |side: fn(&(usize, usize)) -> usize, i: usize| {
        Matrix::from_fn(sides.len(), sides.len(), |r, c| {
            if r == c && side(&sides[r]) == i {
                q(1)
            } else {
                q(0)
            }
        })
    };
    let left = (0..2).map(|i| diag(|s| s.0, i)).collect();
    let right = (0..2).map(|i| diag(|s| s.1, i)).collect();
    let m = Bimodule::new(a, sides.len(), left, right).unwrap();
    assert_eq!(bimodule_center(&m).len(), 3);
    // The swap twist forces m = 0.
    assert_eq!(bimodule_center(&twisted_bimodule(&fixtures::swap_action::<Rational>(), 1)).len(), 0);
}

#[test]
fn twisted_centers_match_twisted_class_counts() {
    let z3 = FiniteGroup::cyclic(3);
    let klein = FiniteGroup::by_name("Z2xZ2").unwrap();
    let s3 = FiniteGroup::symmetric(3).unwrap();
    let swap: Vec<usize> = (0..4).map(|x| (x % 2) * 2 + x / 2).collect();
    let t = 1; // an element of order 2 in S3 under the discovery order
    assert_eq!(s3.element_order(t), 2);
    let inner: Vec<usize> = s3.elements().map(|x| s3.conjugate(t, x)).collect();
    let cases: Vec<(&FiniteGroup, Vec<usize>)> = vec![(&z3, vec![0, 2, 1]), (&klein, swap), (&s3, inner)];
    for (h, phi) in cases {
        let action = automorphism_action(h, &phi);
        let center = bimodule_center(&twisted_bimodule(&action, 1)).len();
        assert_eq!(center, twisted_class_count(h, &phi));
    }
}

#[test]
fn crossed_product_with_trivial_action() {
    let algebras: Vec<StructAlgebra<Rational>> = vec![
        StructAlgebra::diagonal(2),
        StructAlgebra::matrix_algebra(2),
        StructAlgebra::truncated_polynomial(2),
    ];
    for a in algebras {
        let a = Arc::new(a);
        for name in ["Z2", "S3"] {
            let g = group(name);
            let action = GroupAction::trivial(g.clone(), a.clone());
            let c = crossed_product(&action);
            assert!(c.check().is_ok());
            assert_eq!(c.center().len(), a.center().len() * g.conjugacy().num_classes());
            // The unit is (1_A, identity).
            let mut unit = vec![q(0); c.dim()];
            unit[g.identity() * a.dim()..(g.identity() + 1) * a.dim()].clone_from_slice(a.unit());
            assert_eq!(c.unit(), &unit[..]);
        }
    }
}

#[test]
fn center_decomposition_suite() {
    let expected = [1, 1, 2, 3];
    for ((name, action), dim) in fixtures::center_suite::<CycScalar>().into_iter().zip(expected) {
        let r = center_decomposition(&action).unwrap();
        assert!(r.passes(), "{name}");
        assert_eq!(r.crossed_center_dim, dim, "{name}");
        assert_eq!(r.invariant_dim, dim, "{name}");
    }
    for (name, action) in action_pool::<Rational>() {
        let r = center_decomposition(&action).unwrap();
        assert!(r.passes(), "{name}");
    }
    // Trivial group: the decomposition is the center of A.
    let a = Arc::new(StructAlgebra::<Rational>::matrix_algebra(2));
    let r = center_decomposition(&GroupAction::trivial(group("trivial"), a)).unwrap();
    assert_eq!((r.crossed_center_dim, r.invariant_dim), (1, 1));
}

#[test]
fn schur_count_for_twisted_group_algebras() {
    let cases = [
        ("Z2", 2),
        ("Z4", 2),
        ("Z2xZ2", 2),
        ("S3", 2),
        ("D4", 2),
        ("Q8", 2),
        ("Z2xZ2xZ2", 2),
        ("Z3", 3),
        ("S3", 3),
    ];
    for (name, p) in cases {
        let g = group(name);
        for c in enumerate_cocycles(g, p).unwrap().elements().unwrap() {
            let a = StructAlgebra::<CycScalar>::twisted_group_algebra(&c).unwrap();
            let report = count_simples(&a);
            assert!(report.semisimple, "{name}");
            assert_eq!(report.simples, Some(c.regular_classes().regular_count()), "{name} mod {p}");
        }
    }
}

#[test]
fn kunneth_degree_zero_on_all_pairs() {
    let pairs = bimodule_pairs::<Rational>(16);
    assert!(pairs.len() > 100);
    for (name, m, n) in pairs {
        let r = kunneth_center(&m, &n);
        assert!(r.bijective, "{name}: {r:?}");
        assert_eq!(r.center_tensor, r.center_m * r.center_n, "{name}");
    }
}

#[test]
fn adjunction_on_seeded_instances() {
    for (name, action, m, n) in adjunction_instances::<Rational>(5, 20) {
        let r = induction_adjunction_check(&action, &m, &n).unwrap();
        assert!(r.holds, "{name}: {r:?}");
    }
    // Trivial group: induction is the identity.
    let a = Arc::new(StructAlgebra::<Rational>::truncated_polynomial(2));
    let action = GroupAction::trivial(group("trivial"), a.clone());
    let m = LeftModule::regular(a.as_ref());
    let r = induction_adjunction_check(&action, &m, &LeftModule::regular(&crossed_product(&action))).unwrap();
    assert_eq!((r.induced_side, r.restricted_side), (2, 2));
}

#[test]
fn rejects_non_automorphisms() {
    let a = Arc::new(StructAlgebra::<Rational>::truncated_polynomial(2));
    // x -> 1 is not multiplicative.
    let bad = Matrix::from_rows(vec![vec![q(1), q(1)], vec![q(0), q(0)]]);
    assert!(GroupAction::new(group("Z2"), a, vec![Matrix::identity(2), bad]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn hom_is_additive(x in prop::collection::vec(-2i64..=2, 4), y in prop::collection::vec(-2i64..=2, 4)) {
        let a = StructAlgebra::<Rational>::matrix_algebra(2);
        let xv: Vec<Rational> = x.into_iter().map(q).collect();
        let yv: Vec<Rational> = y.into_iter().map(q).collect();
        let m1 = LeftModule::cyclic_submodule(&a, &xv);
        let m2 = LeftModule::cyclic_submodule(&a, &yv);
        let n = LeftModule::regular(&a);
        let sum = module_hom_dim(&m1.direct_sum(&m2), &n).unwrap();
        prop_assert_eq!(sum, module_hom_dim(&m1, &n).unwrap() + module_hom_dim(&m2, &n).unwrap());
    }

    #[test]
    fn adjunction_for_random_modules(seed in any::<u64>()) {
        for (name, action, m, n) in adjunction_instances::<Rational>(seed, 3) {
            let r = induction_adjunction_check(&action, &m, &n).unwrap();
            prop_assert!(r.holds, "{}: {:?}", name, r);
        }
    }
}
