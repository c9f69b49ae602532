//! Small algebras with group actions used by the test suites and the CLI.

use std::sync::Arc;

use super::{GroupAction, StructAlgebra};
use crate::field::Field;
use crate::groups::FiniteGroup;
use crate::linalg::Matrix;

fn z2() -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::cyclic(2))
}

fn perm_matrix<F: Field>(perm: &[usize]) -> Matrix<F> {
    Matrix::from_fn(perm.len(), perm.len(), |r, c| {
        if perm[c] == r {
            F::one()
        } else {
            F::zero()
        }
    })
}

fn involution<F: Field>(algebra: StructAlgebra<F>, m: Matrix<F>) -> GroupAction<F> {
    let d = algebra.dim();
    GroupAction::new(z2(), Arc::new(algebra), vec![Matrix::identity(d), m]).expect("valid involution")
}

/// `k[Z/2] = k[x]/(x^2 - 1)` with `x -> -x`.
pub fn sign_action<F: Field>() -> GroupAction<F> {
    let a = StructAlgebra::group_algebra(&FiniteGroup::cyclic(2));
    let m = Matrix::from_rows(vec![vec![F::one(), F::zero()], vec![F::zero(), -F::one()]]);
    involution(a, m)
}

/// `k x k` with the factors swapped.
pub fn swap_action<F: Field>() -> GroupAction<F> {
    involution(StructAlgebra::diagonal(2), perm_matrix(&[1, 0]))
}

/// `M_2(k)` with conjugation by the permutation matrix `[[0,1],[1,0]]`,
/// which sends `E_rc` to `E_{1-r,1-c}`.
pub fn inner_action<F: Field>() -> GroupAction<F> {
    involution(StructAlgebra::matrix_algebra(2), perm_matrix(&[3, 2, 1, 0]))
}

/// `k[Z/3]` with `x -> x^-1`.
pub fn inversion_action<F: Field>() -> GroupAction<F> {
    involution(
        StructAlgebra::group_algebra(&FiniteGroup::cyclic(3)),
        perm_matrix(&[0, 2, 1]),
    )
}

/// The four pairs of the center-decomposition suite.
pub fn center_suite<F: Field>() -> Vec<(&'static str, GroupAction<F>)> {
    vec![
        ("k[Z2] with sign action", sign_action()),
        ("k x k with swap", swap_action()),
        ("M2(k) with inner action", inner_action()),
        ("k[Z3] with inversion", inversion_action()),
    ]
}
