//! Values that are stated outright in the source material rather than
//! derived here.

use std::sync::Arc;

use twotrace::cocycles::{enumerate_cocycles, Cocycle};
use twotrace::groups::FiniteGroup;
use twotrace::linalg::Matrix;
use twotrace::tworep::box_rep;
use twotrace::twomatrix::VectMatrix;
use twotrace::{CycScalar, CycTwoRep, Field};

fn group(name: &str) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::by_name(name).unwrap())
}

/// `c(g, h) = zeta_2^{a_2 b_1}` on `Z2 x Z2`, elements indexed `2 a_1 + a_2`.
fn klein_cocycle() -> Cocycle {
    Cocycle::from_fn(group("Z2xZ2"), 2, |g, h| ((g % 2) * (h / 2)) as i64)
}

#[test]
fn klein_character_on_the_generators_is_minus_one() {
    let c = klein_cocycle();
    assert!(c.is_valid());
    let (g, h) = (2, 1); // (1,0) and (0,1)
    assert_eq!(c.two_character_closed_form(g, h).unwrap(), CycScalar::from_int(-1));
    let rho = CycTwoRep::from_cocycle(&c).unwrap();
    assert_eq!(rho.two_character(g, h).unwrap(), CycScalar::from_int(-1));
}

#[test]
fn identity_functor_trace_has_dimension_m() {
    for m in 0..=6 {
        assert_eq!(VectMatrix::identity(m).ttr().unwrap().total_dim, m);
    }
}

fn sample_reps() -> Vec<CycTwoRep> {
    let mut reps = vec![CycTwoRep::from_cocycle(&klein_cocycle()).unwrap()];
    for (name, p) in [("Z4", 2), ("S3", 3), ("D4", 2), ("Q8", 2)] {
        let space = enumerate_cocycles(group(name), p).unwrap();
        reps.extend(space.elements().unwrap().step_by(7).take(4).map(|c| CycTwoRep::from_cocycle(&c).unwrap()));
    }
    let s3 = group("S3");
    let perms = s3.coset_action(&s3.subgroup_generated(&[1]).unwrap());
    reps.push(CycTwoRep::from_group_action_on_set(s3, perms, None).unwrap());
    reps
}

#[test]
fn psi_of_the_identity_is_the_identity() {
    for rho in sample_reps() {
        let grp = rho.group().clone();
        for g in grp.elements() {
            let psi = rho.psi(grp.identity(), g).unwrap();
            assert_eq!(psi, Matrix::identity(rho.fixed_points(g).len()));
        }
    }
}

#[test]
fn cocycle_character_is_the_commutator_ratio() {
    for (name, p) in [("Z2xZ2", 2), ("Z4", 2), ("S3", 2), ("S3", 3), ("D4", 2), ("Q8", 2)] {
        for c in enumerate_cocycles(group(name), p).unwrap().elements().unwrap().step_by(5) {
            let rho = CycTwoRep::from_cocycle(&c).unwrap();
            for (g, h) in c.group().commuting_pairs() {
                assert_eq!(rho.two_character(g, h).unwrap(), c.two_character_closed_form(g, h).unwrap());
            }
        }
    }
}

#[test]
fn character_is_invariant_under_simultaneous_conjugation() {
    for rho in sample_reps() {
        let grp = rho.group().clone();
        for (g, h) in grp.commuting_pairs() {
            let chi = rho.two_character(g, h).unwrap();
            for s in grp.elements() {
                let (g2, h2) = (grp.conjugate(s, g), grp.conjugate(s, h));
                assert_eq!(rho.two_character(g2, h2).unwrap(), chi);
            }
        }
    }
}

#[test]
fn box_product_character_is_the_product() {
    let reps = sample_reps();
    let (rho, sigma) = (&reps[0], reps.last().unwrap());
    let boxed = box_rep(rho, sigma).unwrap();
    let (g1, g2) = (rho.group(), sigma.group());
    let n2 = g2.order();
    for (a, s) in g1.commuting_pairs() {
        for (b, t) in g2.commuting_pairs() {
            let lhs = boxed.two_character(a * n2 + b, s * n2 + t).unwrap();
            let rhs = rho.two_character(a, s).unwrap() * sigma.two_character(b, t).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn twisted_algebra_of_a_cocycle_rep_multiplies_by_the_cocycle() {
    let c = klein_cocycle();
    let rho = CycTwoRep::from_cocycle(&c).unwrap();
    let r = rho.twisted_group_algebra().unwrap();
    let grp = c.group();
    // One basis vector per group element, in group order.
    assert_eq!(r.basis, grp.elements().map(|g| (g, 0)).collect::<Vec<_>>());
    for g in grp.elements() {
        for h in grp.elements() {
            let prod = r.algebra.mul(&r.algebra.basis_vector(g), &r.algebra.basis_vector(h));
            let mut expected = vec![CycScalar::from_int(0); grp.order()];
            expected[grp.mul(g, h)] = c.value(g, h);
            assert_eq!(prod, expected);
        }
    }
}
