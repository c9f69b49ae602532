//! The acceptance suite. Each criterion returns a deterministic outcome;
//! wall-clock time is measured alongside but kept out of the report.

use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::json;
use twotrace::algebras::{bimodule_center, center_decomposition, crossed_product, fixtures, induction_adjunction_check, kunneth_center, twisted_bimodule, Bimodule, GroupAction};
use twotrace::cocycles::{enumerate_cocycles, Cocycle};
use twotrace::groups::FiniteGroup;
use twotrace::hochschild::{hochschild_dims, orbifold_hh_check, HHOptions};
use twotrace::linalg::Matrix;
use twotrace::samples::{adjunction_instances, bimodule_pairs, rep_family, rep_family_on};
use twotrace::tworep::box_rep;
use twotrace::twomatrix::{mu_is_basis_bijective, VectMatrix};
use twotrace::{Algebra, CycScalar, CycTwoRep, Field};

use crate::report::{Caps, Report, Table};

/// Reps generated for criteria 2 and 4.
pub const FAMILY_SIZE: usize = 56;
/// Reps generated for the box-product part of criterion 3.
pub const BOX_FAMILY_SIZE: usize = 16;
const BOX_GROUPS: [&str; 6] = ["trivial", "Z2", "Z3", "Z4", "Z2xZ2", "S3"];
const SCHUR_CASES: [(&str, u32); 6] = [("Z4", 2), ("Z2xZ2", 2), ("S3", 2), ("D4", 2), ("Q8", 2), ("S3", 3)];

#[derive(Debug, Clone, Serialize)]
pub struct Criterion {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    /// Number of individual identities checked.
    pub checks: usize,
    pub detail: String,
    pub within_limit: bool,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub limit: Option<Duration>,
}

impl Criterion {
    pub fn ok(&self) -> bool {
        self.passed && self.within_limit
    }

    pub fn line(&self) -> String {
        let limit = self.limit.map(|l| format!(", limit {}s", l.as_secs())).unwrap_or_default();
        format!(
            "criterion {}: {} {} [{} checks, {:.1}s{limit}] {}",
            self.id,
            if self.ok() { "PASS" } else { "FAIL" },
            self.title,
            self.checks,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

/// Running tally of one criterion.
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < 5 {
            self.failures.push(what());
        }
    }

    fn failed(&self) -> bool {
        !self.failures.is_empty()
    }
}

fn timed(id: u8, title: &str, limit_secs: Option<u64>, f: impl FnOnce(&mut Tally) -> String) -> Criterion {
    let start = Instant::now();
    let mut tally = Tally::new();
    let detail = f(&mut tally);
    let elapsed = start.elapsed();
    let limit = limit_secs.map(Duration::from_secs);
    let detail = if tally.failed() {
        format!("{detail}; failures: {}", tally.failures.join("; "))
    } else {
        detail
    };
    Criterion {
        id,
        title: title.to_string(),
        passed: !tally.failed(),
        checks: tally.checks,
        detail,
        within_limit: limit.map_or(true, |l| elapsed <= l),
        elapsed,
        limit,
    }
}

fn group(name: &str) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::by_name(name).expect("builder name"))
}

fn int(n: usize) -> CycScalar {
    CycScalar::from_int(n as i64)
}

pub fn schur_sweep() -> Criterion {
    timed(1, "Schur sweep", Some(60), |t| {
        let mut total = 0;
        for (name, p) in SCHUR_CASES {
            let space = enumerate_cocycles(group(name), p).expect("small group");
            for c in space.elements().expect("listable") {
                total += 1;
                let regular = c.regular_classes().regular_count();
                let center = Algebra::twisted_group_algebra(&c).expect("valid").center().len();
                let sum = c.closed_form_character_sum();
                t.check(center == regular && sum == int(regular), || {
                    format!("{name} mod {p}: regular {regular}, center {center}, sum {sum}")
                });
            }
        }
        let klein = Cocycle::from_fn(group("Z2xZ2"), 2, |g, h| ((g % 2) * (h / 2)) as i64);
        let witness = klein.regular_classes().regular_count();
        t.check(klein.is_valid() && witness == 1, || format!("Z2xZ2 witness gave {witness}"));
        format!("{total} cocycles over Z4, Z2xZ2, S3, D4, Q8 mod 2 and S3 mod 3; Z2xZ2 nontrivial class gives {witness}")
    })
}

fn family_kinds(family: &[(String, CycTwoRep)]) -> String {
    let count = |pat: &str| family.iter().filter(|(l, _)| l.contains(pat)).count();
    format!(
        "{} with cocycle parts, {} with permutation parts, {} induced, {} direct sums",
        count("cocycle"),
        count("cosets"),
        count("induced"),
        count(" + ")
    )
}

pub fn invariants_sweep(seed: u64) -> Criterion {
    timed(2, "invariants equal character sums", Some(120), |t| {
        let family = rep_family(seed, FAMILY_SIZE, 4);
        for (label, rep) in &family {
            t.check(rep.is_valid() && rep.group().order() <= 8 && rep.m() <= 4, || format!("{label}: out of range"));
            let r = rep.twisted_group_algebra().expect("valid");
            let dim = r.invariant_basis().len();
            let sum = rep.character_sum().expect("valid");
            t.check(sum == int(dim), || format!("{label}: invariants {dim}, character sum {sum}"));
            t.check(r.invariants_central(), || format!("{label}: invariants not central"));
        }
        format!("{} reps ({})", family.len(), family_kinds(&family))
    })
}

/// Square functors on `Vect^m` with entries in `0..=2`.
fn all_square(m: usize) -> Vec<VectMatrix> {
    let cells = m * m;
    (0..3usize.pow(cells as u32))
        .map(|mut code| {
            let mut dims = vec![vec![0; m]; m];
            for k in 0..cells {
                dims[k / m][k % m] = code % 3;
                code /= 3;
            }
            VectMatrix::square(dims)
        })
        .collect()
}

/// Functors with a given diagonal and one of three fixed off-diagonal fillings.
fn with_diagonal(diag: &[usize], filling: usize) -> VectMatrix {
    let m = diag.len();
    VectMatrix::square(
        (0..m)
            .map(|i| (0..m).map(|j| if i == j { diag[i] } else { (i * 2 + j + filling) % 3 }).collect())
            .collect(),
    )
}

fn diagonals(m: usize) -> Vec<Vec<usize>> {
    (0..3usize.pow(m as u32))
        .map(|mut code| {
            (0..m)
                .map(|_| {
                    let d = code % 3;
                    code /= 3;
                    d
                })
                .collect()
        })
        .collect()
}

fn check_pair(t: &mut Tally, f: &VectMatrix, h: &VectMatrix) {
    let lhs = f.boxed(h).ttr().expect("square").total_dim;
    let rhs = f.ttr().expect("square").total_dim * h.ttr().expect("square").total_dim;
    t.check(lhs == rhs, || format!("{:?} x {:?}: {lhs} != {rhs}", f.dims, h.dims));
    let bij = mu_is_basis_bijective::<CycScalar>(f, h).expect("square");
    t.check(bij, || format!("mu not bijective on {:?} x {:?}", f.dims, h.dims));
}

pub fn multiplicativity(seed: u64) -> Criterion {
    timed(3, "multiplicativity of traces and 2-characters", Some(60), |t| {
        // Every pair with m, n <= 2.
        let small: Vec<VectMatrix> = (1..=2).flat_map(all_square).collect();
        for f in &small {
            for h in &small {
                check_pair(t, f, h);
            }
        }
        let exhaustive = small.len() * small.len();
        // Pairs involving size 3: every pair of diagonals, three off-diagonal
        // fillings each. Traces and mu only see diagonal entries.
        let mut covered = 0;
        let diags: Vec<Vec<usize>> = (1..=3).flat_map(diagonals).collect();
        for d1 in &diags {
            for d2 in &diags {
                if d1.len() < 3 && d2.len() < 3 {
                    continue;
                }
                for filling in 0..3 {
                    check_pair(t, &with_diagonal(d1, filling), &with_diagonal(d2, (filling + 1) % 3));
                    covered += 1;
                }
            }
        }
        let family = rep_family_on(seed, BOX_FAMILY_SIZE, 3, &BOX_GROUPS);
        let mut rep_pairs = 0;
        for (l1, rho) in &family {
            for (l2, sigma) in &family {
                rep_pairs += 1;
                let boxed = box_rep(rho, sigma).expect("valid factors");
                let n2 = sigma.group().order();
                for (a, x) in rho.group().commuting_pairs() {
                    let chi1 = rho.two_character(a, x).expect("commuting");
                    for (b, y) in sigma.group().commuting_pairs() {
                        let lhs = boxed.two_character(a * n2 + b, x * n2 + y).expect("commuting");
                        let rhs = chi1.clone() * sigma.two_character(b, y).expect("commuting");
                        t.check(lhs == rhs, || format!("{l1} x {l2} at ({a},{x}),({b},{y})"));
                    }
                }
            }
        }
        format!(
            "{exhaustive} functor pairs with m,n <= 2 exhaustively, {covered} size-3 pairs over all diagonals, {rep_pairs} rep pairs"
        )
    })
}

fn check_psi_calculus(t: &mut Tally, label: &str, rep: &CycTwoRep) {
    let g = rep.group();
    let cat = rep.cat_character().expect("valid");
    for x in g.elements() {
        t.check(cat.psi(g.identity(), x) == &Matrix::identity(cat.dim(x)), || format!("{label}: psi_1 != id on X({x})"));
        for a in g.elements() {
            for b in g.elements() {
                let lhs = cat.psi(a, g.conjugate(b, x)).matmul(cat.psi(b, x)).expect("composable");
                t.check(&lhs == cat.psi(g.mul(a, b), x), || format!("{label}: psi_{a} psi_{b} != psi_{a}{b} on X({x})"));
            }
        }
    }
    for ((x, y), v) in rep.character_table().expect("valid") {
        for s in g.elements() {
            let w = rep.two_character(g.conjugate(s, x), g.conjugate(s, y)).expect("commuting");
            t.check(w == v, || format!("{label}: chi not invariant at ({x},{y}) under {s}"));
        }
    }
}

pub fn psi_calculus(seed: u64) -> Criterion {
    timed(4, "psi calculus", Some(60), |t| {
        let family = rep_family(seed, FAMILY_SIZE, 4);
        for (label, rep) in &family {
            check_psi_calculus(t, label, rep);
        }
        let mut cocycles = 0;
        for (name, p) in SCHUR_CASES {
            for c in enumerate_cocycles(group(name), p).expect("small").elements().expect("listable") {
                cocycles += 1;
                let rep = CycTwoRep::from_cocycle(&c).expect("valid");
                for (x, y) in c.group().commuting_pairs() {
                    let chi = rep.two_character(x, y).expect("commuting");
                    let closed = c.two_character_closed_form(x, y).expect("commuting");
                    t.check(chi == closed, || format!("{name} mod {p}: chi({x},{y}) = {chi}, closed form {closed}"));
                }
            }
        }
        format!("{} generated reps, {cocycles} one-object cocycle reps against the closed form", family.len())
    })
}

pub fn center_decompositions() -> Criterion {
    timed(5, "center decomposition", Some(30), |t| {
        let mut dims = Vec::new();
        for (name, action) in fixtures::center_suite::<CycScalar>() {
            let d = center_decomposition(&action).expect("valid action");
            t.check(d.dims_agree(), || format!("{name}: {} != {}", d.crossed_center_dim, d.invariant_dim));
            t.check(d.images_central, || format!("{name}: image not central"));
            t.check(d.multiplicative, || format!("{name}: not multiplicative"));
            t.check(d.passes(), || format!("{name}: decomposition fails"));
            dims.push(format!("{name} {}", d.crossed_center_dim));
        }
        format!("center dims: {}", dims.join(", "))
    })
}

type CycAlg = Arc<Algebra>;

fn hh_instances() -> Vec<(String, Bimodule<CycScalar>, bool)> {
    let s = |a: Algebra| -> CycAlg { Arc::new(a) };
    let z2 = FiniteGroup::cyclic(2);
    let z3 = FiniteGroup::cyclic(3);
    let algebras: Vec<(&str, CycAlg, bool)> = vec![
        ("k", s(Algebra::diagonal(1)), true),
        ("k x k", s(Algebra::diagonal(2)), true),
        ("k^3", s(Algebra::diagonal(3)), true),
        ("M2(k)", s(Algebra::matrix_algebra(2)), true),
        ("k[Z2]", s(Algebra::group_algebra(&z2)), true),
        ("k[Z3]", s(Algebra::group_algebra(&z3)), true),
        ("k[x]/(x^2)", s(Algebra::truncated_polynomial(2)), false),
        ("k[x]/(x^3)", s(Algebra::truncated_polynomial(3)), false),
    ];
    let mut out: Vec<(String, Bimodule<CycScalar>, bool)> = algebras
        .into_iter()
        .map(|(n, a, sep)| (n.to_string(), Bimodule::regular(a), sep))
        .collect();
    for (name, action) in fixtures::center_suite::<CycScalar>() {
        for g in action.group().elements().filter(|&g| g != action.group().identity()) {
            out.push((format!("{name}, twisted by {g}"), twisted_bimodule(&action, g), false));
        }
    }
    out
}

pub fn hochschild() -> Criterion {
    timed(6, "Hochschild cohomology", Some(120), |t| {
        let instances = hh_instances();
        for (name, m, separable) in &instances {
            let a = m.algebra().clone();
            let r = hochschild_dims(&a, m, HHOptions::degree(3)).expect("within cap");
            t.check(r.delta_squared_zero, || format!("{name}: delta^2 != 0"));
            t.check(r.dims[0] == bimodule_center(m).len(), || format!("{name}: HH^0 != center"));
            if *separable {
                t.check(r.dims[1..].iter().all(|&d| d == 0), || format!("{name}: HH^(1..3) = {:?}", &r.dims[1..]));
            }
        }
        let orbifold: Vec<(&str, GroupAction<CycScalar>)> = vec![
            ("k[Z2] with the sign action", fixtures::sign_action()),
            ("k with trivial S3", GroupAction::trivial(group("S3"), Arc::new(Algebra::diagonal(1)))),
        ];
        let mut shown = Vec::new();
        for (name, action) in orbifold {
            let r = orbifold_hh_check(&action, HHOptions::degree(2)).expect("within cap");
            for d in &r.degrees {
                t.check(d.agree, || format!("{name}: degree {} gives {} vs {}", d.degree, d.crossed_side, d.invariant_side));
            }
            t.check(r.passes(), || format!("{name}: orbifold check fails"));
            let dims: Vec<String> = r.degrees.iter().map(|d| d.crossed_side.to_string()).collect();
            shown.push(format!("{name} ({})", dims.join(",")));
        }
        format!("{} complexes to degree 3; orbifold: {}", instances.len(), shown.join("; "))
    })
}

pub fn kunneth_degree_zero() -> Criterion {
    timed(7, "Kunneth in degree zero", Some(30), |t| {
        let pairs = bimodule_pairs::<CycScalar>(16);
        for (name, m, n) in &pairs {
            let r = kunneth_center(m, n);
            t.check(r.bijective, || format!("{name}: {r:?}"));
        }
        format!("{} bimodule pairs with dim A * dim B <= 16", pairs.len())
    })
}

pub fn adjunction(seed: u64) -> Criterion {
    timed(8, "induction adjunction", Some(30), |t| {
        let instances = adjunction_instances::<CycScalar>(seed, 20);
        for (name, action, m, n) in &instances {
            let size = action.algebra().dim() * action.group().order();
            t.check(size <= 12, || format!("{name}: d|G| = {size}"));
            t.check(n.dim() <= crossed_product(action).dim() * 2, || format!("{name}: module too large"));
            let r = induction_adjunction_check(action, m, n).expect("compatible");
            t.check(r.holds, || format!("{name}: {} vs {}", r.induced_side, r.restricted_side));
        }
        format!("{} instances", instances.len())
    })
}

/// Criteria 1 through 8, in order.
pub fn run_checks(seed: u64) -> Vec<Criterion> {
    vec![
        schur_sweep(),
        invariants_sweep(seed),
        multiplicativity(seed),
        psi_calculus(seed),
        center_decompositions(),
        hochschild(),
        kunneth_degree_zero(),
        adjunction(seed),
    ]
}

fn suite_report(seed: u64, caps: Caps, criteria: &[Criterion]) -> Report {
    let mut table = Table::new(&["criterion", "title", "result", "checks", "within_limit", "detail"]);
    for c in criteria {
        table.push(vec![
            c.id.to_string(),
            c.title.clone(),
            if c.ok() { "pass" } else { "fail" }.to_string(),
            c.checks.to_string(),
            c.within_limit.to_string(),
            c.detail.clone(),
        ]);
    }
    Report {
        command: "accept".into(),
        inputs: Vec::new(),
        seed,
        caps,
        passed: criteria.iter().all(Criterion::ok),
        result: json!({ "criteria": criteria }),
        table: Some(table),
    }
}

/// Reruns criteria 1 to 8 and compares the rendered reports byte for byte.
pub fn determinism(seed: u64, caps: Caps, first: &[Criterion]) -> Criterion {
    timed(9, "determinism", None, |t| {
        let second = run_checks(seed);
        let a = suite_report(seed, caps, first).render(crate::Format::Json).expect("serializable");
        let b = suite_report(seed, caps, &second).render(crate::Format::Json).expect("serializable");
        t.check(a == b, || "reports differ between two runs".into());
        format!("two runs, {} report bytes each", a.len())
    })
}

/// All nine criteria. Progress lines go to stderr as each one finishes.
pub fn run_all(seed: u64, caps: Caps) -> Vec<Criterion> {
    let mut out = Vec::new();
    for c in run_checks(seed) {
        eprintln!("{}", c.line());
        out.push(c);
    }
    let det = determinism(seed, caps, &out);
    eprintln!("{}", det.line());
    out.push(det);
    out
}

pub fn accept_report(seed: u64, caps: Caps) -> Report {
    suite_report(seed, caps, &run_all(seed, caps))
}
