use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use twotrace::field::{euler_phi, CycScalar, Field, Rational};
use twotrace::linalg::Matrix;

const CONDUCTORS: [u32; 7] = [1, 2, 3, 4, 6, 8, 12];

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn cyc_at(n: u32) -> impl Strategy<Value = CycScalar> {
    prop::collection::vec(small_rational(), euler_phi(n)).prop_map(move |c| CycScalar::new(n, c).unwrap())
}

fn cyc() -> impl Strategy<Value = CycScalar> {
    prop::sample::select(CONDUCTORS.to_vec()).prop_flat_map(cyc_at)
}

fn q_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(-2i64..=2, rows * cols).prop_map(move |v| {
        Matrix::from_row_major(rows, cols, v.into_iter().map(Rational::from_int).collect()).unwrap()
    })
}

proptest! {
    #[test]
    fn field_axioms(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!(a.clone() - a.clone(), CycScalar::from_int(0));
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * a.inv().unwrap(), CycScalar::from_int(1));
        }
    }

    #[test]
    fn promotion_is_a_field_embedding(
        (n, a, b) in prop::sample::select(CONDUCTORS.to_vec()).prop_flat_map(|n| (Just(n), cyc_at(n), cyc_at(n))),
        k in 1u32..=3,
    ) {
        let t = n * k;
        let (pa, pb) = (a.promote(t).unwrap(), b.promote(t).unwrap());
        prop_assert_eq!((a.clone() * b.clone()).promote(t).unwrap(), pa.checked_mul(&pb).unwrap());
        prop_assert_eq!((a.clone() + b.clone()).promote(t).unwrap(), pa.checked_add(&pb).unwrap());
        prop_assert_eq!(pa.demote(n).unwrap(), Some(a));
    }

    #[test]
    fn serde_round_trip(a in cyc()) {
        let s = serde_json::to_string(&a).unwrap();
        let back: CycScalar = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back.conductor(), a.conductor());
        prop_assert_eq!(back.coeffs(), a.coeffs());
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in q_matrix(3, 5)) {
        let kernel = m.kernel_vectors();
        prop_assert_eq!(kernel.len() + m.rank(), 5);
        for v in kernel {
            prop_assert!(m.apply(&v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn rank_of_kronecker_product(a in q_matrix(3, 3), b in q_matrix(3, 3)) {
        prop_assert_eq!(a.kron(&b).rank(), a.rank() * b.rank());
    }

    #[test]
    fn solve_returns_a_solution(m in q_matrix(3, 3), x in q_matrix(3, 1)) {
        let b = &m * &x;
        let sol = m.solve(&b).unwrap().expect("b is in the image");
        prop_assert_eq!(&m * &sol, b);
    }
}

#[test]
fn cyclotomic_identities() {
    // 1 + zeta_3 + zeta_3^2 = 0 and zeta_4^2 = -1 as values of different conductors.
    let z3 = |k| CycScalar::root_of_unity(3, k);
    assert_eq!(z3(0) + z3(1) + z3(2), CycScalar::from_int(0));
    assert_eq!(CycScalar::root_of_unity(4, 2), CycScalar::from_int(-1));
    assert_eq!(CycScalar::root_of_unity(12, 4), z3(1));
    assert!(CycScalar::root_of_unity(4, 1).checked_add(&z3(1)).is_err());
}
