use std::sync::Arc;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};
use twotrace::algebras::{
    center_decomposition, count_simples, crossed_product, induction_adjunction_check, kunneth_center, Bimodule,
};
use twotrace::cocycles::{enumerate_cocycles, Cocycle};
use twotrace::hochschild::{hochschild_self, kunneth_hh, orbifold_hh_check, HHOptions};
use twotrace::samples::module_pairs;
use twotrace::tworep::{box_rep, inner_product_character_sum, inner_product_dim, TwoRepJson};
use twotrace::{Algebra, CycScalar, CycTwoRep, Field};

use crate::input::{check_order, load, ActionFile, Loaded};
use crate::report::{InputDigest, Report, Table};
use crate::{accept, AlgebraCmd, Cli, CocycleCmd, Command, GroupCmd, HhCmd, Target, TworepCmd};

/// Number of seeded module pairs tried by `algebra adjunction`.
const ADJUNCTION_PAIRS: usize = 5;

struct Ctx<'a> {
    cli: &'a Cli,
}

impl Ctx<'_> {
    fn report(&self, command: &str, inputs: Vec<InputDigest>, passed: bool, result: Value, table: Option<Table>) -> Report {
        Report {
            command: command.to_string(),
            inputs,
            seed: self.cli.seed,
            caps: self.cli.caps(),
            passed,
            result,
            table,
        }
    }

    fn hh_options(&self, normalized: bool) -> HHOptions {
        HHOptions {
            max_degree: self.cli.max_degree,
            cap: twotrace::hochschild::DEFAULT_CAP,
            normalized,
        }
    }
}

pub fn dispatch(cli: &Cli) -> Result<Report> {
    let ctx = Ctx { cli };
    match &cli.command {
        Command::Group { action } => group(&ctx, action),
        Command::Cocycle { action } => cocycle(&ctx, action),
        Command::Tworep { action } => tworep(&ctx, action),
        Command::Algebra { action } => algebra(&ctx, action),
        Command::Hh { action } => hh(&ctx, action),
        Command::Schur(t) => schur(&ctx, t),
        Command::Report(t) => rep_report(&ctx, t),
        Command::Accept => Ok(accept::accept_report(cli.seed, cli.caps())),
    }
}

fn s<T: ToString>(x: T) -> String {
    x.to_string()
}

fn group(ctx: &Ctx, cmd: &GroupCmd) -> Result<Report> {
    let cap = ctx.cli.cap_order;
    match cmd {
        GroupCmd::Info(t) => {
            let (g, inputs) = t.resolve_group(cap)?;
            let conj = g.conjugacy();
            let sizes: Vec<usize> = conj.classes.iter().map(Vec::len).collect();
            let result = json!({
                "name": g.name(),
                "order": g.order(),
                "exponent": g.exponent(),
                "abelian": g.is_abelian(),
                "classes": conj.num_classes(),
                "class_sizes": sizes,
                "commuting_pairs": g.commuting_pairs().len(),
                "labels": g.labels(),
            });
            Ok(ctx.report("group info", inputs, true, result, None))
        }
        GroupCmd::Table(t) => {
            let (g, inputs) = t.resolve_group(cap)?;
            let headers: Vec<String> = std::iter::once("*".to_string()).chain(g.labels().iter().cloned()).collect();
            let mut table = Table {
                headers,
                rows: Vec::new(),
            };
            for a in g.elements() {
                let mut row = vec![g.label(a).to_string()];
                row.extend(g.elements().map(|b| g.label(g.mul(a, b)).to_string()));
                table.push(row);
            }
            let result = json!({ "name": g.name(), "order": g.order(), "identity": g.identity() });
            Ok(ctx.report("group table", inputs, true, result, Some(table)))
        }
        GroupCmd::Classes(t) => {
            let (g, inputs) = t.resolve_group(cap)?;
            let conj = g.conjugacy();
            let mut table = Table::new(&["class", "representative", "label", "size", "centralizer_order", "element_order"]);
            for (i, class) in conj.classes.iter().enumerate() {
                let r = class[0];
                table.push(vec![
                    s(i),
                    s(r),
                    s(g.label(r)),
                    s(class.len()),
                    s(conj.centralizers[r].len()),
                    s(g.element_order(r)),
                ]);
            }
            let result = json!({ "name": g.name(), "classes": conj.classes });
            Ok(ctx.report("group classes", inputs, true, result, Some(table)))
        }
        GroupCmd::Commuting(t) => {
            let (g, inputs) = t.resolve_group(cap)?;
            let pairs = g.commuting_pairs();
            let mut table = Table::new(&["g", "h"]);
            for &(a, b) in &pairs {
                table.push(vec![s(a), s(b)]);
            }
            let classes = g.conjugacy().num_classes();
            let passed = pairs.len() == g.order() * classes;
            let result = json!({ "count": pairs.len(), "order_times_classes": g.order() * classes });
            Ok(ctx.report("group commuting", inputs, passed, result, Some(table)))
        }
    }
}

fn load_cocycle(t: &Target, cap: usize) -> Result<Loaded<Cocycle>> {
    let l: Loaded<Cocycle> = load(t.one_input()?)?;
    check_order(l.value.group(), cap)?;
    Ok(l)
}

fn chi_table_for_cocycle(c: &Cocycle) -> Result<(Table, bool)> {
    let rep = CycTwoRep::from_cocycle(c)?;
    let g = c.group();
    let mut table = Table::new(&["g", "h", "chi", "closed_form"]);
    let mut agree = true;
    for (a, b) in g.commuting_pairs() {
        let chi = rep.two_character(a, b)?;
        let closed = c.two_character_closed_form(a, b)?;
        agree &= chi == closed;
        table.push(vec![s(a), s(b), s(&chi), s(&closed)]);
    }
    Ok((table, agree))
}

fn cocycle(ctx: &Ctx, cmd: &CocycleCmd) -> Result<Report> {
    let cap = ctx.cli.cap_order;
    match cmd {
        CocycleCmd::Validate(t) => {
            let l = load_cocycle(t, cap)?;
            let v = l.value.violations();
            let shown: Vec<_> = v.iter().take(20).collect();
            let result = json!({ "valid": v.is_empty(), "violations": v.len(), "first_violations": shown });
            Ok(ctx.report("cocycle validate", vec![l.digest], v.is_empty(), result, None))
        }
        CocycleCmd::Enumerate(t) => {
            let (g, inputs) = t.resolve_group(cap)?;
            let space = enumerate_cocycles(g.clone(), t.modulus()?)?;
            let mut table = Table::new(&["basis_vector", "exps"]);
            for (i, b) in space.basis.iter().enumerate() {
                let flat: Vec<String> = b.exps_table().into_iter().flatten().map(s).collect();
                table.push(vec![s(i), flat.join(" ")]);
            }
            let result = json!({
                "group": g.name(),
                "modulus": space.modulus,
                "dim_cocycles": space.dim_cocycles(),
                "dim_coboundaries": space.dim_coboundaries,
                "cocycles": space.len(),
                "classes": space.class_count(),
            });
            Ok(ctx.report("cocycle enumerate", inputs, true, result, Some(table)))
        }
        CocycleCmd::Regular(t) => {
            let l = load_cocycle(t, cap)?;
            let c = l.value;
            if !c.is_valid() {
                let result = json!({ "valid": false, "violations": c.violations().len() });
                return Ok(ctx.report("cocycle regular", vec![l.digest], false, result, None));
            }
            let r = c.regular_classes();
            let mut table = Table::new(&["representative", "label", "size", "regular", "witness"]);
            for k in &r.classes {
                let w = k.witness.map(|(a, b)| format!("{a},{b}")).unwrap_or_default();
                table.push(vec![s(k.representative), s(c.group().label(k.representative)), s(k.size), s(k.regular), w]);
            }
            let result = json!({ "regular_classes": r.regular_count(), "classes": r.classes.len() });
            Ok(ctx.report("cocycle regular", vec![l.digest], true, result, Some(table)))
        }
        CocycleCmd::Chi(t) => {
            let l = load_cocycle(t, cap)?;
            let c = l.value;
            if !c.is_valid() {
                let result = json!({ "valid": false, "violations": c.violations().len() });
                return Ok(ctx.report("cocycle chi", vec![l.digest], false, result, None));
            }
            let (table, agree) = chi_table_for_cocycle(&c)?;
            let result = json!({ "pairs": table.rows.len(), "diagram_matches_closed_form": agree });
            Ok(ctx.report("cocycle chi", vec![l.digest], agree, result, Some(table)))
        }
    }
}

fn schur(ctx: &Ctx, t: &Target) -> Result<Report> {
    let (g, inputs) = t.resolve_group(ctx.cli.cap_order)?;
    let p = t.modulus()?;
    let space = enumerate_cocycles(g.clone(), p)?;
    let mut table = Table::new(&["cocycle", "regular_classes", "center_dim", "character_sum"]);
    let mut all_equal = true;
    for (i, c) in space.elements()?.enumerate() {
        let regular = c.regular_classes().regular_count();
        let center = Algebra::twisted_group_algebra(&c)?.center().len();
        let sum = c.closed_form_character_sum();
        all_equal &= center == regular && sum == CycScalar::from_int(regular as i64);
        table.push(vec![s(i), s(regular), s(center), s(&sum)]);
    }
    let result = json!({
        "group": g.name(),
        "modulus": p,
        "cocycles": table.rows.len(),
        "classes": g.conjugacy().num_classes(),
        "all_equal": all_equal,
    });
    Ok(ctx.report("schur", inputs, all_equal, result, Some(table)))
}

fn load_rep(path: &std::path::Path, cap: usize) -> Result<Loaded<CycTwoRep>> {
    let l: Loaded<TwoRepJson<CycScalar>> = load(path)?;
    let rep = CycTwoRep::from_json(l.value)?;
    check_order(rep.group(), cap)?;
    Ok(Loaded {
        value: rep,
        digest: l.digest,
    })
}

/// A failing report listing the violations, or the validated rep.
fn validated(ctx: &Ctx, command: &str, l: Loaded<CycTwoRep>) -> Result<CycTwoRep, Report> {
    let v = l.value.violations();
    if v.is_empty() {
        Ok(l.value.validated().expect("no violations"))
    } else {
        let text: Vec<String> = v.iter().take(20).map(|x| x.to_string()).collect();
        let result = json!({
            "valid": false,
            "violations": v.len(),
            "first_violations": v.iter().take(20).collect::<Vec<_>>(),
            "messages": text,
        });
        Err(ctx.report(command, vec![l.digest], false, result, None))
    }
}

fn chi_table(rep: &CycTwoRep) -> Result<Table> {
    let g = rep.group();
    let mut table = Table::new(&["g", "h", "g_label", "h_label", "chi"]);
    for ((a, b), v) in rep.character_table()? {
        table.push(vec![s(a), s(b), s(g.label(a)), s(g.label(b)), s(&v)]);
    }
    Ok(table)
}

fn tworep(ctx: &Ctx, cmd: &TworepCmd) -> Result<Report> {
    let cap = ctx.cli.cap_order;
    match cmd {
        TworepCmd::Validate(t) => {
            let l = load_rep(t.one_input()?, cap)?;
            let digest = l.digest.clone();
            match validated(ctx, "tworep validate", l) {
                Err(r) => Ok(r),
                Ok(rep) => {
                    let result = json!({ "valid": true, "group": rep.group().name(), "m": rep.m() });
                    Ok(ctx.report("tworep validate", vec![digest], true, result, None))
                }
            }
        }
        TworepCmd::Character(t) => {
            let l = load_rep(t.one_input()?, cap)?;
            let digest = l.digest.clone();
            let rep = match validated(ctx, "tworep character", l) {
                Err(r) => return Ok(r),
                Ok(r) => r,
            };
            let cat = rep.cat_character()?;
            let g = rep.group().clone();
            let mut table = Table::new(&["g", "label", "dim", "fixed_points"]);
            for x in g.elements() {
                let pts: Vec<String> = cat.bases[x].iter().map(s).collect();
                table.push(vec![s(x), s(g.label(x)), s(cat.dim(x)), pts.join(" ")]);
            }
            // psi_1 = id and psi_s psi_t = psi_st, checked on every (s, t, g).
            let mut functor = true;
            for x in g.elements() {
                functor &= cat.psi(g.identity(), x) == &twotrace::linalg::Matrix::identity(cat.dim(x));
                for a in g.elements() {
                    for b in g.elements() {
                        let lhs = cat.psi(a, g.conjugate(b, x)).matmul(cat.psi(b, x)).expect("composable");
                        functor &= &lhs == cat.psi(g.mul(a, b), x);
                    }
                }
            }
            let result = json!({ "group": g.name(), "m": rep.m(), "functorial": functor });
            Ok(ctx.report("tworep character", vec![digest], functor, result, Some(table)))
        }
        TworepCmd::ChiTable(t) => {
            let l = load_rep(t.one_input()?, cap)?;
            let digest = l.digest.clone();
            let rep = match validated(ctx, "tworep chi-table", l) {
                Err(r) => return Ok(r),
                Ok(r) => r,
            };
            let table = chi_table(&rep)?;
            let g = rep.group();
            let mut invariant = true;
            for ((a, b), v) in rep.character_table()? {
                for x in g.elements() {
                    invariant &= rep.two_character(g.conjugate(x, a), g.conjugate(x, b))? == v;
                }
            }
            let result = json!({
                "pairs": table.rows.len(),
                "conjugation_invariant": invariant,
                "character_sum": s(rep.character_sum()?),
            });
            Ok(ctx.report("tworep chi-table", vec![digest], invariant, result, Some(table)))
        }
        TworepCmd::Boxprod(t) => {
            let (pa, pb) = t.two_inputs()?;
            let (la, lb) = (load_rep(pa, cap)?, load_rep(pb, cap)?);
            let digests = vec![la.digest.clone(), lb.digest.clone()];
            let rho = match validated(ctx, "tworep boxprod", la) {
                Err(r) => return Ok(r),
                Ok(r) => r,
            };
            let sigma = match validated(ctx, "tworep boxprod", lb) {
                Err(r) => return Ok(r),
                Ok(r) => r,
            };
            if rho.group().order() * sigma.group().order() > cap {
                bail!("product group order exceeds --cap-order {cap}");
            }
            let boxed = box_rep(&rho, &sigma)?;
            let n2 = sigma.group().order();
            let mut table = Table::new(&["g", "h", "chi", "product_of_factors"]);
            let mut multiplicative = true;
            for (a, x) in rho.group().commuting_pairs() {
                for (b, y) in sigma.group().commuting_pairs() {
                    let (g, h) = (a * n2 + b, x * n2 + y);
                    let lhs = boxed.two_character(g, h)?;
                    let rhs = rho.two_character(a, x)? * sigma.two_character(b, y)?;
                    multiplicative &= lhs == rhs;
                    table.push(vec![s(g), s(h), s(&lhs), s(&rhs)]);
                }
            }
            let result = json!({
                "group": boxed.group().name(),
                "m": boxed.m(),
                "multiplicative": multiplicative,
                "rep": boxed.to_json(),
            });
            Ok(ctx.report("tworep boxprod", digests, multiplicative, result, Some(table)))
        }
        TworepCmd::Innerprod(t) => {
            let (pa, pb) = t.two_inputs()?;
            let (la, lb) = (load_rep(pa, cap)?, load_rep(pb, cap)?);
            let digests = vec![la.digest.clone(), lb.digest.clone()];
            let rho = match validated(ctx, "tworep innerprod", la) {
                Err(r) => return Ok(r),
                Ok(r) => r,
            };
            let sigma = match validated(ctx, "tworep innerprod", lb) {
                Err(r) => return Ok(r),
                Ok(r) => r,
            };
            let dim = inner_product_dim(&rho, &sigma)?;
            let sum = inner_product_character_sum(&rho, &sigma)?;
            let agree = sum == CycScalar::from_int(dim as i64);
            let result = json!({ "invariants_dim": dim, "character_sum": s(&sum), "agree": agree });
            Ok(ctx.report("tworep innerprod", digests, agree, result, None))
        }
        TworepCmd::TwistedAlgebra(t) => {
            let l = load_rep(t.one_input()?, cap)?;
            let digest = l.digest.clone();
            let rep = match validated(ctx, "tworep twisted-algebra", l) {
                Err(r) => return Ok(r),
                Ok(r) => r,
            };
            let (result, passed) = twisted_summary(&rep)?;
            Ok(ctx.report("tworep twisted-algebra", vec![digest], passed, result, None))
        }
    }
}

fn twisted_summary(rep: &CycTwoRep) -> Result<(Value, bool)> {
    let r = rep.twisted_group_algebra()?;
    let invariants = r.invariant_basis().len();
    let sum = rep.character_sum()?;
    let central = r.invariants_central();
    let automorphisms = r.action_by_automorphisms();
    let agree = sum == CycScalar::from_int(invariants as i64);
    let basis: Vec<String> = r.basis.iter().map(|(g, j)| format!("{g}:{j}")).collect();
    let result = json!({
        "dim": r.algebra.dim(),
        "basis": basis,
        "center_dim": r.algebra.center().len(),
        "invariants_dim": invariants,
        "character_sum": s(&sum),
        "invariants_central": central,
        "action_by_automorphisms": automorphisms,
        "invariants_match_character_sum": agree,
    });
    Ok((result, agree && central && automorphisms))
}

fn rep_report(ctx: &Ctx, t: &Target) -> Result<Report> {
    let l = load_rep(t.one_input()?, ctx.cli.cap_order)?;
    let digest = l.digest.clone();
    let rep = match validated(ctx, "report", l) {
        Err(r) => return Ok(r),
        Ok(r) => r,
    };
    let (mut result, passed) = twisted_summary(&rep)?;
    let table = chi_table(&rep)?;
    let dims: Vec<usize> = rep.group().elements().map(|g| rep.fixed_points(g).len()).collect();
    result["valid"] = json!(true);
    result["group"] = json!(rep.group().name());
    result["m"] = json!(rep.m());
    result["character_dims"] = json!(dims);
    Ok(ctx.report("report", vec![digest], passed, result, Some(table)))
}

fn load_algebra(path: &std::path::Path) -> Result<Loaded<Algebra>> {
    load(path)
}

fn load_action(path: &std::path::Path, cap: usize) -> Result<(twotrace::CycAction, InputDigest)> {
    let l: Loaded<ActionFile> = load(path)?;
    let action = l.value.build().with_context(|| format!("building the action in {}", path.display()))?;
    check_order(action.group(), cap)?;
    Ok((action, l.digest))
}

fn basis_strings(basis: &[Vec<CycScalar>]) -> Vec<Vec<String>> {
    basis.iter().map(|v| v.iter().map(s).collect()).collect()
}

fn algebra(ctx: &Ctx, cmd: &AlgebraCmd) -> Result<Report> {
    let cap = ctx.cli.cap_order;
    match cmd {
        AlgebraCmd::Center(t) => {
            let l = load_algebra(t.one_input()?)?;
            let z = l.value.center();
            let result = json!({
                "dim": l.value.dim(),
                "center_dim": z.len(),
                "commutative": l.value.is_commutative(),
                "center_basis": basis_strings(&z),
            });
            Ok(ctx.report("algebra center", vec![l.digest], true, result, None))
        }
        AlgebraCmd::Crossed(t) => {
            let (action, digest) = load_action(t.one_input()?, cap)?;
            let c = crossed_product(&action);
            let classes = action.group().conjugacy().num_classes();
            let result = json!({
                "dim": c.dim(),
                "center_dim": c.center().len(),
                "group_classes": classes,
                "algebra": c,
            });
            Ok(ctx.report("algebra crossed", vec![digest], true, result, None))
        }
        AlgebraCmd::Decompose(t) => {
            let (action, digest) = load_action(t.one_input()?, cap)?;
            let d = center_decomposition(&action)?;
            let g = action.group();
            let mut table = Table::new(&["representative", "label", "class_size", "centralizer_order", "center_dim", "invariant_dim"]);
            for sm in &d.summands {
                table.push(vec![
                    s(sm.representative),
                    s(g.label(sm.representative)),
                    s(sm.class.len()),
                    s(sm.centralizer.len()),
                    s(sm.center_basis.len()),
                    s(sm.invariant_basis.len()),
                ]);
            }
            let result = json!({
                "crossed_center_dim": d.crossed_center_dim,
                "invariant_dim": d.invariant_dim,
                "images_central": d.images_central,
                "images_independent": d.images_independent,
                "multiplicative": d.multiplicative,
                "unit_preserved": d.unit_preserved,
            });
            Ok(ctx.report("algebra decompose", vec![digest], d.passes(), result, Some(table)))
        }
        AlgebraCmd::Schur(t) => {
            let l = load_algebra(t.one_input()?)?;
            let r = count_simples(&l.value);
            let result = serde_json::to_value(&r)?;
            Ok(ctx.report("algebra schur", vec![l.digest], r.semisimple, result, None))
        }
        AlgebraCmd::Kunneth(t) => {
            let (pa, pb) = t.two_inputs()?;
            let (la, lb) = (load_algebra(pa)?, load_algebra(pb)?);
            let m = Bimodule::regular(Arc::new(la.value));
            let n = Bimodule::regular(Arc::new(lb.value));
            let r = kunneth_center(&m, &n);
            let result = serde_json::to_value(&r)?;
            Ok(ctx.report("algebra kunneth", vec![la.digest, lb.digest], r.bijective, result, None))
        }
        AlgebraCmd::Adjunction(t) => {
            let (action, digest) = load_action(t.one_input()?, cap)?;
            let mut table = Table::new(&["pair", "dim_m", "dim_n", "induced_side", "restricted_side", "holds"]);
            let mut all = true;
            for (i, (m, n)) in module_pairs(&action, ctx.cli.seed, ADJUNCTION_PAIRS).into_iter().enumerate() {
                let r = induction_adjunction_check(&action, &m, &n)?;
                all &= r.holds;
                table.push(vec![s(i), s(m.dim()), s(n.dim()), s(r.induced_side), s(r.restricted_side), s(r.holds)]);
            }
            let result = json!({ "pairs": ADJUNCTION_PAIRS, "all_hold": all });
            Ok(ctx.report("algebra adjunction", vec![digest], all, result, Some(table)))
        }
    }
}

fn hh(ctx: &Ctx, cmd: &HhCmd) -> Result<Report> {
    match cmd {
        HhCmd::Dims { target, normalized } => {
            let l = load_algebra(target.one_input()?)?;
            let a = Arc::new(l.value);
            let r = hochschild_self(&a, ctx.hh_options(*normalized))?;
            let mut table = Table::new(&["degree", "cochain_dim", "rank", "dim"]);
            for n in 0..r.dims.len() {
                table.push(vec![s(n), s(r.cochain_dims[n]), s(r.ranks[n]), s(r.dims[n])]);
            }
            let passed = r.delta_squared_zero && r.degree_zero_is_center();
            let result = json!({
                "dims": r.dims,
                "normalized": r.normalized,
                "delta_squared_zero": r.delta_squared_zero,
                "center_dim": r.center_dim,
            });
            Ok(ctx.report("hh dims", vec![l.digest], passed, result, Some(table)))
        }
        HhCmd::Kunneth(t) => {
            let (pa, pb) = t.two_inputs()?;
            let (la, lb) = (load_algebra(pa)?, load_algebra(pb)?);
            let r = kunneth_hh(&Arc::new(la.value), &Arc::new(lb.value), ctx.hh_options(false))?;
            let mut table = Table::new(&["degree", "product_side", "tensor_side", "agree"]);
            for d in &r.degrees {
                table.push(vec![s(d.degree), s(d.product_side), s(d.tensor_side), s(d.agree)]);
            }
            let result = json!({ "center": r.center, "passes": r.passes() });
            Ok(ctx.report("hh kunneth", vec![la.digest, lb.digest], r.passes(), result, Some(table)))
        }
        HhCmd::Orbifold(t) => {
            let (action, digest) = load_action(t.one_input()?, ctx.cli.cap_order)?;
            let r = orbifold_hh_check(&action, ctx.hh_options(false))?;
            let mut table = Table::new(&["degree", "crossed_side", "invariant_side", "per_element", "agree"]);
            for d in &r.degrees {
                let per: Vec<String> = d.per_element.iter().map(s).collect();
                table.push(vec![s(d.degree), s(d.crossed_side), s(d.invariant_side), per.join(" "), s(d.agree)]);
            }
            let result = json!({
                "center_invariant_dim": r.center_invariant_dim,
                "degree_zero_matches_center": r.degree_zero_matches_center,
                "delta_squared_zero": r.delta_squared_zero,
            });
            Ok(ctx.report("hh orbifold", vec![digest], r.passes(), result, Some(table)))
        }
    }
}
