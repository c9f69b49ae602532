use std::sync::Arc;

use num_traits::{One, Zero};
use twotrace::algebras::{center_decomposition, fixtures, Bimodule, GroupAction, StructAlgebra};
use twotrace::field::Rational;
use twotrace::groups::FiniteGroup;
use twotrace::hochschild::{hochschild_dims, hochschild_self, kunneth_hh, orbifold_hh_check, HHOptions, HochschildError};

type Dense = Vec<Vec<Rational>>;

fn rank(mut m: Dense) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone() / pivot.clone();
                for k in c..cols {
                    let v = m[r][k].clone() * f.clone();
                    m[i][k] -= v;
                }
            }
        }
        r += 1;
    }
    r
}

/// Value of `delta f` on the basis tuple `args`, where `f` is the basis
/// cochain sending the tuple `src` to the basis vector `out` and everything
/// else to zero. Evaluated straight from the formula, one term at a time.
fn delta_entry(a: &StructAlgebra<Rational>, m: &Bimodule<Rational>, src: &[usize], out: usize, args: &[usize]) -> Vec<Rational> {
    let n = src.len();
    let dm = m.dim();
    let mut result = vec![Rational::zero(); dm];
    let e = |k: usize| {
        let mut v = vec![Rational::zero(); dm];
        v[k] = Rational::one();
        v
    };
    // a_1 f(a_2, ..., a_{n+1})
    if args[1..] == *src {
        let v = m.left_action(&a.basis_vector(args[0]), &e(out));
        result.iter_mut().zip(v).for_each(|(x, y)| *x += y);
    }
    // (-1)^i f(..., a_i a_{i+1}, ...)
    for i in 0..n {
        let sign = if (i + 1) % 2 == 0 { Rational::one() } else { -Rational::one() };
        let before = &args[..i];
        let after = &args[i + 2..];
        if src[..i] != *before || src[i + 1..] != *after {
            continue;
        }
        let coeff = a.coeff(args[i], args[i + 1], src[i]);
        if !coeff.is_zero() {
            result[out] += sign.clone() * coeff;
        }
    }
    // (-1)^{n+1} f(a_1, ..., a_n) a_{n+1}
    if args[..n] == *src {
        let sign = if (n + 1) % 2 == 0 { Rational::one() } else { -Rational::one() };
        let v = m.right_action(&e(out), &a.basis_vector(args[n]));
        result.iter_mut().zip(v).for_each(|(x, y)| *x += sign.clone() * y);
    }
    result
}

fn tuples(d: usize, n: usize) -> Vec<Vec<usize>> {
    (0..n).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|t| {
                (0..d).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect()
    })
}

/// Dense matrix of `delta^n : C^n -> C^{n+1}`.
fn delta_oracle(a: &StructAlgebra<Rational>, m: &Bimodule<Rational>, n: usize) -> Dense {
    let (d, dm) = (a.dim(), m.dim());
    let srcs = tuples(d, n);
    let dsts = tuples(d, n + 1);
    let mut rows = vec![vec![Rational::zero(); srcs.len() * dm]; dsts.len() * dm];
    for (si, s) in srcs.iter().enumerate() {
        for out in 0..dm {
            for (ti, t) in dsts.iter().enumerate() {
                for (r, v) in delta_entry(a, m, s, out, t).into_iter().enumerate() {
                    rows[ti * dm + r][si * dm + out] = v;
                }
            }
        }
    }
    rows
}

fn hh_oracle(a: &StructAlgebra<Rational>, m: &Bimodule<Rational>, max_degree: usize) -> Vec<usize> {
    let ranks: Vec<usize> = (0..=max_degree).map(|n| rank(delta_oracle(a, m, n))).collect();
    (0..=max_degree)
        .map(|n| a.dim().pow(n as u32) * m.dim() - ranks[n] - if n == 0 { 0 } else { ranks[n - 1] })
        .collect()
}

fn arc(a: StructAlgebra<Rational>) -> Arc<StructAlgebra<Rational>> {
    Arc::new(a)
}

fn group(name: &str) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::by_name(name).unwrap())
}

fn normalized(max_degree: usize) -> HHOptions {
    HHOptions {
        normalized: true,
        ..HHOptions::degree(max_degree)
    }
}

#[test]
fn dual_numbers_and_k_times_k() {
    let dual = arc(StructAlgebra::truncated_polynomial(2));
    let kk = arc(StructAlgebra::diagonal(2));
    for (a, expected) in [(&dual, vec![2, 1, 1, 1]), (&kk, vec![2, 0, 0, 0])] {
        let m = Bimodule::regular(a.clone());
        assert_eq!(hh_oracle(a, &m, 3), expected);
        assert_eq!(hochschild_self(a, HHOptions::degree(3)).unwrap().dims, expected);
        assert_eq!(hochschild_self(a, normalized(3)).unwrap().dims, expected);
    }
}

#[test]
fn library_matches_oracle_on_assorted_bimodules() {
    let z2 = FiniteGroup::cyclic(2);
    let z3 = FiniteGroup::cyclic(3);
    let mut cases: Vec<(String, Bimodule<Rational>, usize)> = Vec::new();
    for (name, a, deg) in [
        ("k", StructAlgebra::diagonal(1), 3),
        ("k^3", StructAlgebra::diagonal(3), 2),
        ("k[x]/x^3", StructAlgebra::truncated_polynomial(3), 2),
        ("k[Z2]", StructAlgebra::group_algebra(&z2), 3),
        ("k[Z3]", StructAlgebra::group_algebra(&z3), 2),
        ("M2", StructAlgebra::matrix_algebra(2), 2),
    ] {
        let a = arc(a);
        let reg = Bimodule::regular(a.clone());
        cases.push((format!("{name} regular"), reg.direct_sum(&Bimodule::regular(a.clone())), deg.min(2)));
        cases.push((name.to_string(), reg, deg));
    }
    for (name, action) in fixtures::center_suite::<Rational>() {
        for g in action.group().elements() {
            let m = twotrace::algebras::twisted_bimodule(&action, g);
            cases.push((format!("{name} twisted by {g}"), m, 2));
        }
    }
    for (name, m, deg) in cases {
        let a = m.algebra().clone();
        let oracle = hh_oracle(&a, &m, deg);
        let plain = hochschild_dims(&a, &m, HHOptions::degree(deg)).unwrap();
        let norm = hochschild_dims(&a, &m, normalized(deg)).unwrap();
        assert_eq!(plain.dims, oracle, "{name}");
        assert_eq!(norm.dims, oracle, "{name}");
        assert!(plain.delta_squared_zero && norm.delta_squared_zero, "{name}");
        assert!(plain.degree_zero_is_center(), "{name}");
    }
}

#[test]
fn separable_algebras_have_no_higher_cohomology() {
    for (a, deg) in [
        (StructAlgebra::diagonal(1), 3),
        (StructAlgebra::diagonal(2), 3),
        (StructAlgebra::diagonal(3), 3),
        (StructAlgebra::matrix_algebra(2), 2),
        (StructAlgebra::group_algebra(&FiniteGroup::symmetric(3).unwrap()), 1),
    ] {
        let a = arc(a);
        let r = hochschild_self(&a, HHOptions::degree(deg)).unwrap();
        assert_eq!(r.dims[0], a.center().len());
        assert!(r.dims[1..].iter().all(|&x| x == 0), "{:?}", r.dims);
    }
}

#[test]
fn kunneth_in_low_degrees() {
    let dual = arc(StructAlgebra::truncated_polynomial(2));
    let kk = arc(StructAlgebra::diagonal(2));
    let k = arc(StructAlgebra::diagonal(1));
    for (a, b, deg) in [(&kk, &kk, 2), (&dual, &k, 3), (&dual, &kk, 2), (&dual, &dual, 2)] {
        let r = kunneth_hh(a, b, HHOptions::degree(deg)).unwrap();
        assert!(r.passes(), "{r:?}");
    }
    // (2,1,1) (x) (2,1,1) in degrees 0..=2.
    let r = kunneth_hh(&dual, &dual, HHOptions::degree(2)).unwrap();
    let tensor: Vec<usize> = r.degrees.iter().map(|d| d.tensor_side).collect();
    assert_eq!(tensor, vec![4, 4, 5]);
}

#[test]
fn orbifold_decomposition() {
    let mut actions: Vec<(String, GroupAction<Rational>, usize)> = fixtures::center_suite::<Rational>()
        .into_iter()
        .map(|(n, a)| (n.to_string(), a, 2))
        .collect();
    actions.push(("k, trivial S3".into(), GroupAction::trivial(group("S3"), arc(StructAlgebra::diagonal(1))), 2));
    actions.push((
        "k[x]/x^2, trivial Z2".into(),
        GroupAction::trivial(group("Z2"), arc(StructAlgebra::truncated_polynomial(2))),
        2,
    ));
    for (name, action, deg) in actions {
        let r = orbifold_hh_check(&action, HHOptions::degree(deg)).unwrap();
        assert!(r.passes(), "{name}: {r:?}");
        let center = center_decomposition(&action).unwrap();
        assert_eq!(r.degrees[0].crossed_side, center.crossed_center_dim, "{name}");
        assert_eq!(r.center_invariant_dim, center.invariant_dim, "{name}");
    }
    let trivial = GroupAction::trivial(group("S3"), arc(StructAlgebra::diagonal(1)));
    let r = orbifold_hh_check(&trivial, HHOptions::degree(2)).unwrap();
    let crossed: Vec<usize> = r.degrees.iter().map(|d| d.crossed_side).collect();
    assert_eq!(crossed, vec![3, 0, 0]);
}

#[test]
fn cap_is_enforced() {
    let a = arc(StructAlgebra::matrix_algebra(3));
    let opts = HHOptions {
        cap: 1000,
        ..HHOptions::degree(3)
    };
    assert!(matches!(hochschild_self(&a, opts), Err(HochschildError::CapExceeded { .. })));
}
