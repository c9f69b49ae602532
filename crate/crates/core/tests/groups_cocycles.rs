use std::sync::Arc;

use proptest::prelude::*;
use twotrace::cocycles::{enumerate_cocycles, Cocycle};
use twotrace::groups::FiniteGroup;
use twotrace::Field;

const NAMES: [&str; 9] = ["trivial", "Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8", "Z2xZ3"];

fn group(i: usize) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::by_name(NAMES[i % NAMES.len()]).unwrap())
}

/// Number of solutions of the cocycle identity over `Z/p`, as `p^dim`, by
/// plain Gaussian elimination on the `|G|^3 x |G|^2` system.
fn cocycle_dim_oracle(g: &FiniteGroup, p: i64) -> usize {
    let n = g.order();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                // c(a,b) + c(ab,c) - c(b,c) - c(a,bc) = 0
                let mut r = vec![0i64; n * n];
                r[a * n + b] += 1;
                r[g.mul(a, b) * n + c] += 1;
                r[b * n + c] -= 1;
                r[a * n + g.mul(b, c)] -= 1;
                rows.push(r.into_iter().map(|x| x.rem_euclid(p)).collect());
            }
        }
    }
    let inv = |x: i64| (1..p).find(|y| (x * y) % p == 1).unwrap();
    let mut rank = 0;
    for col in 0..n * n {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let f = inv(rows[rank][col]);
        for x in rows[rank].iter_mut() {
            *x = (*x * f) % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let k = rows[r][col];
                for c in 0..n * n {
                    rows[r][c] = (rows[r][c] - k * rows[rank][c]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    n * n - rank
}

#[test]
fn cocycle_dimensions_match_elimination_oracle() {
    // (group, modulus, dim Z^2)
    let expected = [
        ("Z2", 2, 2),
        ("Z2xZ2", 2, 5),
        ("Z4", 2, 4),
        ("S3", 2, 6),
        ("S3", 3, 6),
        ("D4", 2, 9),
        ("Q8", 2, 8),
    ];
    for (name, p, dim) in expected {
        let g = Arc::new(FiniteGroup::by_name(name).unwrap());
        assert_eq!(cocycle_dim_oracle(&g, p), dim, "{name} mod {p}");
        let space = enumerate_cocycles(g, p as u32).unwrap();
        assert_eq!(space.dim_cocycles(), dim, "{name} mod {p}");
    }
}

#[test]
fn cohomology_class_counts() {
    // |H^2(G, Z/p)| from dim Z^2 - dim B^2.
    for (name, p, classes) in [("Z2", 2, 2), ("Z2xZ2", 2, 8), ("Z4", 2, 2), ("S3", 2, 2), ("S3", 3, 1), ("D4", 2, 8), ("Q8", 2, 4)] {
        let g = Arc::new(FiniteGroup::by_name(name).unwrap());
        assert_eq!(enumerate_cocycles(g, p).unwrap().class_count(), classes, "{name} mod {p}");
    }
}

fn random_cocycle(g: Arc<FiniteGroup>, p: u32, digits: &[u32]) -> Cocycle {
    let space = enumerate_cocycles(g.clone(), p).unwrap();
    let mut c = Cocycle::zero(g, p);
    for (b, d) in space.basis.iter().zip(digits.iter().cycle()) {
        for _ in 0..d % p {
            c = c.product(b);
        }
    }
    c
}

proptest! {
    #[test]
    fn class_sizes_and_centralizers(i in 0usize..NAMES.len()) {
        let g = group(i);
        let conj = g.conjugacy();
        for x in g.elements() {
            let size = conj.classes[conj.class_of[x]].len();
            prop_assert_eq!(size * conj.centralizers[x].len(), g.order());
            for s in g.elements() {
                prop_assert_eq!(conj.class_of[g.conjugate(s, x)], conj.class_of[x]);
            }
        }
        prop_assert_eq!(g.commuting_pairs().len(), g.order() * conj.num_classes());
    }

    #[test]
    fn product_class_count(i in 0usize..NAMES.len(), j in 0usize..5) {
        let (a, b) = (group(i), group(j));
        let p = FiniteGroup::direct_product(&a, &b);
        prop_assert_eq!(p.conjugacy().num_classes(), a.conjugacy().num_classes() * b.conjugacy().num_classes());
    }

    #[test]
    fn cohomologous_cocycles_agree(
        i in 1usize..8,
        p in prop::sample::select(vec![2u32, 3]),
        digits in prop::collection::vec(0u32..3, 1..10),
        cochain in prop::collection::vec(0i64..6, 8),
    ) {
        let g = group(i);
        let c = random_cocycle(g.clone(), p, &digits);
        prop_assert!(c.is_valid());
        let b: Vec<i64> = cochain.iter().cycle().take(g.order()).copied().collect();
        let c2 = c.product(&Cocycle::coboundary(g.clone(), p, &b).unwrap());
        prop_assert!(c2.is_valid());
        for (x, y) in g.commuting_pairs() {
            let chi = c.two_character_closed_form(x, y).unwrap();
            prop_assert_eq!(&chi, &c2.two_character_closed_form(x, y).unwrap());
            prop_assert_eq!(chi * c.two_character_closed_form(y, x).unwrap(), twotrace::CycScalar::from_int(1));
        }
        let r1: Vec<bool> = c.regular_classes().classes.iter().map(|k| k.regular).collect();
        let r2: Vec<bool> = c2.regular_classes().classes.iter().map(|k| k.regular).collect();
        prop_assert_eq!(r1, r2);
        prop_assert!(c.normalize().is_normalized());
    }

    #[test]
    fn regularity_matches_opposite(
        i in 1usize..8,
        digits in prop::collection::vec(0u32..2, 1..10),
    ) {
        let g = group(i);
        let c = random_cocycle(g.clone(), 2, &digits);
        let op = c.opposite();
        prop_assert!(op.is_valid());
        let conj = g.conjugacy();
        let op_report = op.regular_classes();
        let op_conj = op.group().conjugacy();
        // Same element set and same classes, so compare class by class.
        for k in c.regular_classes().classes {
            let idx = op_conj.class_of[k.representative];
            prop_assert_eq!(k.regular, op_report.classes[idx].regular);
            prop_assert_eq!(k.size, conj.classes[conj.class_of[k.representative]].len());
        }
    }
}
