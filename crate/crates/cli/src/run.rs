use std::fmt::Write as _;

use parh_core::exel::{AlgElem, IdempotentUniverse, PartialGroupAlgebra};
use parh_core::groupoid::{
    b_module, build_groupoid, regular_module, Component, GroupRep, Groupoid, GroupoidError, PartialRepModule, Side,
};
use parh_core::groups::{load_group, named_groups, ElemSet, FiniteGroup, Group, GroupError, Integers, Subgroup};
use parh_core::homology::{
    group_cohomology, group_homology, partial_cohomology_capped, partial_homology_capped, verify_corollary_b,
    verify_theorem_a, verify_vanishing, HomologyError, HomologyReport,
};
use parh_core::linalg::Field;
use parh_core::zcase::{self, ZError};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::*;

/// Exit status 1, 2 or 3, with a one-line diagnostic.
#[derive(Debug)]
pub enum CliError {
    Failed(String),
    Config(String),
    Cap(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Config(_) => 2,
            CliError::Cap(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Failed(m) | CliError::Config(m) | CliError::Cap(m) => m,
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        CliError::Config(e.to_string())
    }
}

impl From<GroupoidError> for CliError {
    fn from(e: GroupoidError) -> Self {
        match e {
            GroupoidError::SizeCap(m) => CliError::Cap(m),
            GroupoidError::InvariantViolation(m) => CliError::Failed(m),
            GroupoidError::Linalg(e) => CliError::Failed(e.to_string()),
            e => CliError::Config(e.to_string()),
        }
    }
}

impl From<HomologyError> for CliError {
    fn from(e: HomologyError) -> Self {
        match e {
            HomologyError::SizeCap(m) => CliError::Cap(m),
            HomologyError::Groupoid(e) => e.into(),
            HomologyError::Linalg(e) => CliError::Failed(e.to_string()),
            e => CliError::Config(e.to_string()),
        }
    }
}

impl From<ZError> for CliError {
    fn from(e: ZError) -> Self {
        match e {
            ZError::Internal(m) => CliError::Failed(m),
            ZError::Linalg(e) => CliError::Failed(e.to_string()),
            e => CliError::Config(e.to_string()),
        }
    }
}

/// A finished command: its report in both forms and whether every check passed.
pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub ok: bool,
}

fn outcome<T: Serialize>(report: &T, text: String, ok: bool) -> Outcome {
    Outcome { json: serde_json::to_value(report).expect("reports serialize"), text, ok }
}

fn list(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|d| d.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn check_mark(ok: bool) -> &'static str {
    if ok { "ok" } else { "FAILED" }
}

fn names(group: &FiniteGroup, elems: impl IntoIterator<Item = usize>) -> Vec<String> {
    elems.into_iter().map(|g| group.elem_name(g)).collect()
}

fn set_name(group: &FiniteGroup, set: parh_core::groups::BitSet) -> String {
    format!("{{{}}}", names(group, set.elements()).join(","))
}

pub fn run(command: Command, seed: u64) -> Result<Outcome, CliError> {
    match command {
        Command::Groups(c) => groups(c),
        Command::Kpar(c) => kpar(c),
        Command::Groupoid(GroupoidCmd::Components { group, caps }) => components(&group, &caps),
        Command::Homology(c) => homology(c),
        Command::Verify(c) => verify(c),
        Command::Z(c) => z(c, seed),
    }
}

fn groups(cmd: GroupsCmd) -> Result<Outcome, CliError> {
    match cmd {
        GroupsCmd::List => {
            let mut rows = Vec::new();
            let mut text = String::new();
            for name in named_groups() {
                let g = load_group(name)?;
                writeln!(text, "{:<6} order {:>2}  {}", name, g.order(), if g.is_abelian() { "abelian" } else { "nonabelian" }).unwrap();
                rows.push(json!({"name": name, "order": g.order(), "abelian": g.is_abelian()}));
            }
            text.push_str("C<n> gives the cyclic group of order n (n ≤ 64)");
            Ok(Outcome { json: Value::Array(rows), text, ok: true })
        }
        GroupsCmd::Show(arg) => {
            let g = load_group(&arg.group)?;
            let elements = g.element_names().to_vec();
            let table = g.cayley_table();
            let width = elements.iter().map(|n| n.len()).max().unwrap_or(1);
            let mut text = format!("{} of order {}\n", g.name(), g.order());
            writeln!(text, "{:>width$} | {}", "", elements.iter().map(|n| format!("{n:>width$}")).collect::<Vec<_>>().join(" ")).unwrap();
            for (a, row) in table.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|&c| format!("{:>width$}", elements[c])).collect();
                writeln!(text, "{:>width$} | {}", elements[a], cells.join(" ")).unwrap();
            }
            let json = json!({"name": g.name(), "order": g.order(), "abelian": g.is_abelian(), "elements": elements, "table": table});
            Ok(Outcome { json, text: text.trim_end().to_string(), ok: true })
        }
    }
}

fn kpar(cmd: KparCmd) -> Result<Outcome, CliError> {
    match cmd {
        KparCmd::Dim { group, caps } => {
            let g = load_group(&group.group)?;
            let n = g.order();
            let dim = PartialGroupAlgebra::new(&g, Field::Rational).dimension();
            let formula = ((n + 1) << n) / 4;
            let groupoid_sum = build_groupoid(&g, caps.max_order())?.dimension_sum();
            let ok = dim == formula && dim == groupoid_sum;
            let text = format!(
                "dim K_par {} = {dim}\n(|G|+1)·2^(|G|-2) = {formula}, groupoid sum = {groupoid_sum}: {}",
                g.name(),
                check_mark(ok)
            );
            let json = json!({"group": g.name(), "dim": dim, "formula": formula, "groupoid_sum": groupoid_sum, "equal": ok});
            Ok(Outcome { json, text, ok })
        }
        KparCmd::Basis(arg) => {
            let g = load_group(&arg.group)?;
            let k = PartialGroupAlgebra::new(&g, Field::Rational);
            let basis: Vec<String> = k.canonical_basis().into_iter().map(|s| k.render_basis(&s)).collect();
            let text = format!("basis of K_par {} ({} elements)\n{}", g.name(), basis.len(), basis.join("\n"));
            Ok(Outcome { json: json!({"group": g.name(), "dim": basis.len(), "basis": basis}), text, ok: true })
        }
    }
}

fn component_json(g: &FiniteGroup, c: &Component) -> Value {
    json!({
        "index": c.index(),
        "n": c.n(),
        "base": set_name(g, c.base()),
        "isotropy_order": c.stabilizer().order(),
        "isotropy": names(g, c.stabilizer().elements().iter().copied()),
        "vertices": c.vertices().iter().map(|&v| set_name(g, v)).collect::<Vec<_>>(),
    })
}

fn components(group: &GroupArg, caps: &CapArg) -> Result<Outcome, CliError> {
    let g = load_group(&group.group)?;
    let gd = build_groupoid(&g, caps.max_order())?;
    let mut text = format!("{}: {} components, Σ n²|H| = {}\n", g.name(), gd.components().len(), gd.dimension_sum());
    for c in gd.components() {
        let iso = names(&g, c.stabilizer().elements().iter().copied()).join(",");
        let verts: Vec<String> = c.vertices().iter().map(|&v| set_name(&g, v)).collect();
        writeln!(text, "  [{}] n = {}, H = <{}>, vertices {}", c.index(), c.n(), iso, verts.join(" ")).unwrap();
    }
    let json = json!({
        "group": g.name(),
        "components": gd.components().iter().map(|c| component_json(&g, c)).collect::<Vec<_>>(),
        "dimension_sum": gd.dimension_sum(),
    });
    Ok(Outcome { json, text: text.trim_end().to_string(), ok: true })
}

fn whole(g: &FiniteGroup) -> Subgroup {
    Subgroup::new(g, g.elements().collect()).expect("the whole group")
}

fn group_rep(g: &FiniteGroup, h: &Subgroup, module: GroupModule, field: Field) -> GroupRep {
    match module {
        GroupModule::Trivial => GroupRep::trivial(g, h, field),
        GroupModule::Regular => GroupRep::regular(g, h, field),
    }
}

fn component<'a>(gd: &'a Groupoid, index: Option<usize>) -> Result<&'a Component, CliError> {
    let i = index.ok_or_else(|| CliError::Config("this module needs --component".into()))?;
    Ok(gd.component(i)?)
}

fn partial_module(g: &FiniteGroup, a: &PartialArgs) -> Result<PartialRepModule, CliError> {
    let field = a.field.field;
    Ok(match a.module {
        PartialModule::B => b_module(g, Side::Left, field)?,
        PartialModule::Regular => regular_module(g, Side::Left, field)?,
        PartialModule::WTrivial | PartialModule::WRegular => {
            let gd = build_groupoid(g, a.caps.max_order())?;
            let c = component(&gd, a.component)?;
            let m = if a.module == PartialModule::WTrivial { GroupModule::Trivial } else { GroupModule::Regular };
            gd.induce_module(c, &group_rep(g, c.stabilizer(), m, field))?
        }
    })
}

fn homology_outcome(r: HomologyReport) -> Outcome {
    let c = &r.checks;
    let ok = c.d2_zero && c.homotopy_id != Some(false) && c.h0_tensor != Some(false);
    let opt = |b: Option<bool>| b.map_or("skipped", check_mark);
    let text = format!(
        "{:?} of {} with coefficients {} over {}: dims {}\nchecks: d² = 0 {}, homotopy {}, degree-0 tensor {}",
        r.kind,
        r.group,
        r.module,
        r.field,
        list(&r.dims),
        check_mark(c.d2_zero),
        opt(c.homotopy_id),
        opt(c.h0_tensor)
    );
    outcome(&r, text, ok)
}

fn homology(cmd: HomologyCmd) -> Result<Outcome, CliError> {
    match cmd {
        HomologyCmd::Partial(a) => {
            let g = load_group(&a.group.group)?;
            let v = partial_module(&g, &a)?;
            Ok(homology_outcome(partial_homology_capped(&g, &v, a.max, a.caps.columns())?))
        }
        HomologyCmd::Cohomology(a) => {
            let g = load_group(&a.group.group)?;
            let v = partial_module(&g, &a)?;
            Ok(homology_outcome(partial_cohomology_capped(&g, &v, a.max, a.caps.columns())?))
        }
        HomologyCmd::Ordinary { group, field, max, module, component: index, cohomology, caps } => {
            let g = load_group(&group.group)?;
            let h = match index {
                Some(i) => build_groupoid(&g, caps.max_order())?.component(i)?.stabilizer().clone(),
                None => whole(&g),
            };
            let u = group_rep(&g, &h, module, field.field);
            let r = if cohomology { group_cohomology(&g, &u, max)? } else { group_homology(&g, &u, max)? };
            Ok(homology_outcome(r))
        }
    }
}

fn verify(cmd: VerifyCmd) -> Result<Outcome, CliError> {
    match cmd {
        VerifyCmd::TheoremA { suite, max, component: index, module } => {
            let g = load_group(&suite.group.group)?;
            let field = suite.field.field;
            let gd = build_groupoid(&g, suite.caps.max_order())?;
            let comps: Vec<&Component> = match index {
                Some(i) => vec![gd.component(i)?],
                None => gd.components().iter().collect(),
            };
            let mut reports = Vec::new();
            let mut text = String::new();
            for c in comps {
                let u = group_rep(&g, c.stabilizer(), module, field);
                let r = verify_theorem_a(&gd, c, &u, max)?;
                writeln!(
                    text,
                    "{} component {} (|H| = {}, {}) over {}: partial {} / {}, ordinary {} / {}: {}",
                    r.group,
                    r.component,
                    r.isotropy_order,
                    r.representation,
                    r.field,
                    list(&r.homology_partial),
                    list(&r.cohomology_partial),
                    list(&r.homology_ordinary),
                    list(&r.cohomology_ordinary),
                    check_mark(r.equal)
                )
                .unwrap();
                reports.push(r);
            }
            let ok = reports.iter().all(|r| r.equal);
            Ok(outcome(&reports, text.trim_end().to_string(), ok))
        }
        VerifyCmd::CorollaryB { suite, max } => {
            let g = load_group(&suite.group.group)?;
            let r = verify_corollary_b(&g, suite.field.field, max)?;
            let text = format!(
                "{} over {}: homology {} vs {}, cohomology {} vs {} ({} components, isotropy orders {}): {}",
                r.group,
                r.field,
                list(&r.dims_bar),
                list(&r.dims_sum),
                list(&r.cohomology_bar),
                list(&r.cohomology_sum),
                r.components,
                list(&r.isotropy_orders),
                check_mark(r.equal)
            );
            Ok(outcome(&r, text, r.equal))
        }
        VerifyCmd::Section5(suite) => {
            let g = load_group(&suite.group.group)?;
            let gd = build_groupoid(&g, suite.caps.max_order())?;
            let reports = gd.components().iter().map(|c| gd.tensor_b_kdelta(c, suite.field.field)).collect::<Result<Vec<_>, _>>()?;
            let mut text = String::new();
            for r in &reports {
                writeln!(
                    text,
                    "component {}: n = {}, dim B⊗KΔ = {}, H acts trivially {}, λπ̃ = id {}, φψ = id {}, ψφ = id {}: {}",
                    r.component,
                    r.n,
                    r.dimension,
                    r.h_action_trivial,
                    r.lambda_pi_identity,
                    r.phi_psi_identity,
                    r.psi_phi_identity,
                    check_mark(r.passed())
                )
                .unwrap();
            }
            let ok = reports.iter().all(|r| r.passed());
            Ok(outcome(&reports, text.trim_end().to_string(), ok))
        }
        VerifyCmd::Section6(suite) => {
            let g = load_group(&suite.group.group)?;
            let gd = build_groupoid(&g, suite.caps.max_order())?;
            let reports = gd.components().iter().map(|c| gd.zeta_checks(c, suite.field.field)).collect::<Result<Vec<_>, _>>()?;
            let mut text = String::new();
            for r in &reports {
                writeln!(
                    text,
                    "component {}: {} arrows, section {}, multiplicative {}, module map {}: {}",
                    r.component,
                    r.arrows,
                    r.section,
                    r.multiplicative,
                    r.module_map,
                    check_mark(r.passed())
                )
                .unwrap();
            }
            let ok = reports.iter().all(|r| r.passed());
            Ok(outcome(&reports, text.trim_end().to_string(), ok))
        }
        VerifyCmd::KparCoeffVanishing { suite, max } => {
            let g = load_group(&suite.group.group)?;
            let r = verify_vanishing(&g, suite.field.field, max)?;
            let text = format!("{} over {}: cohomology with coefficients in K_par G {}: {}", r.group, r.field, list(&r.dims), check_mark(r.vanishing));
            Ok(outcome(&r, text, r.vanishing))
        }
    }
}

#[derive(Serialize)]
struct CancellationSummary {
    group: String,
    field: String,
    k: usize,
    seed: u64,
    instances: usize,
    passed: usize,
    example: Option<CancellationExample>,
}

#[derive(Serialize)]
struct CancellationExample {
    es: Vec<String>,
    rs: Vec<String>,
    m: Vec<Vec<String>>,
    b: Vec<String>,
}

fn cancellation_run<G: Group>(
    alg: &PartialGroupAlgebra<G>,
    universe: &IdempotentUniverse<G>,
    k: usize,
    count: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(usize, Option<CancellationExample>), CliError> {
    let mut passed = 0;
    let mut example = None;
    for _ in 0..count {
        let (es, rs) = zcase::random_instance(alg, universe, k, rng);
        let out = zcase::cancellation_decompose(alg, &es, &rs)?;
        if out.is_skew() && out.reconstructs(alg, &es, &rs) {
            passed += 1;
        }
        if example.is_none() {
            let render = |v: &[AlgElem<G>]| v.iter().map(|x| alg.render(x)).collect::<Vec<_>>();
            example = Some(CancellationExample {
                es: render(&es),
                rs: render(&rs),
                m: out.m.iter().map(|row| render(row)).collect(),
                b: render(&out.b),
            });
        }
    }
    Ok((passed, example))
}

#[derive(Serialize)]
struct DecompositionReport {
    element: String,
    coefficients: Vec<(String, String)>,
}

#[derive(Serialize)]
struct RoundTripReport {
    #[serde(rename = "N")]
    n: i64,
    seed: u64,
    count: usize,
    round_trips: usize,
    ibn: zcase::IbnReport,
}

fn z(cmd: ZCmd, seed: u64) -> Result<Outcome, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match cmd {
        ZCmd::Relations { bound, field } => {
            let r = zcase::verify_f_relations(bound, field.field)?;
            let mut text = format!("f relations for |i|, |j| ≤ {}: {} checks, {} failures", r.bound, r.checked, r.failures.len());
            for f in &r.failures {
                write!(text, "\n  i = {}, j = {}: {}", f.i, f.j, f.relation).unwrap();
            }
            Ok(outcome(&r, text, r.passed))
        }
        ZCmd::Quotient { k, bound, field } => {
            let r = zcase::quotient_check(k, bound.unwrap_or(2 * k + 4), field.field)?;
            let mut text = format!(
                "k = {}, N = {}: {} blocks, window dim {}, dim S1 = {}, dim S2 = {}\nS2 ⊆ S1: {}, S1 ⊆ S2: {}",
                r.k, r.n, r.blocks, r.window_dim, r.dim_s1, r.dim_s2, r.s2_in_s1, r.s1_in_s2
            );
            for v in &r.violations {
                write!(text, "\n  violation of {} at set {:?}", v.containment, v.set).unwrap();
            }
            let ok = r.violations.is_empty();
            Ok(outcome(&r, text, ok))
        }
        ZCmd::Cancellation { group, k, count, field } => {
            if k == 0 {
                return Err(CliError::Config("--k must be at least 1".into()));
            }
            let field = field.field;
            let (name, (passed, example)) = if group == "Z" {
                let zg = Integers;
                let alg = PartialGroupAlgebra::new(&zg, field);
                let u = IdempotentUniverse::new(&zg, -2..=2).map_err(|e| CliError::Config(e.to_string()))?;
                ("Z".to_string(), cancellation_run(&alg, &u, k, count, &mut rng)?)
            } else {
                let g = load_group(&group)?;
                if g.order() > 6 {
                    return Err(CliError::Cap(format!("cancellation instances need order at most 6, got {}", g.order())));
                }
                let alg = PartialGroupAlgebra::new(&g, field);
                (g.name(), cancellation_run(&alg, &IdempotentUniverse::whole(&g), k, count, &mut rng)?)
            };
            let r = CancellationSummary { group: name, field: field.to_string(), k, seed, instances: count, passed, example };
            let mut text = format!("{} random relations of length {} in B of {} over {}: {} decomposed", count, k, r.group, r.field, passed);
            if let Some(ex) = &r.example {
                write!(text, "\nfirst instance:\n  e = {:?}\n  r = {:?}\n  b = {:?}", ex.es, ex.rs, ex.b).unwrap();
            }
            Ok(outcome(&r, text, passed == count))
        }
        ZCmd::IgDecompose { element, count, bound, field } => {
            let zg = Integers;
            let alg = PartialGroupAlgebra::new(&zg, field.field);
            if let Some(text) = element {
                let x = alg.parse(&text).map_err(|e| CliError::Config(e.to_string()))?;
                let parts = zcase::ig_decompose(&alg, &x)?;
                let r = DecompositionReport {
                    element: alg.render(&x),
                    coefficients: parts.iter().map(|(g, b)| (g.to_string(), alg.render(b))).collect(),
                };
                let mut out = format!("{} =", r.element);
                if r.coefficients.is_empty() {
                    out.push_str(" 0");
                }
                for (i, (g, b)) in r.coefficients.iter().enumerate() {
                    write!(out, "{} ({b}) f_{g}", if i == 0 { "" } else { " +" }).unwrap();
                }
                return Ok(outcome(&r, out, true));
            }
            let window = zcase::Window::new(bound)?;
            let mut round_trips = 0;
            for _ in 0..count {
                let x = zcase::random_ig_element(&alg, &window, 4, &mut rng);
                zcase::ig_decompose(&alg, &x)?;
                round_trips += 1;
            }
            let ibn = zcase::ibn_check(bound, field.field)?;
            let ok = round_trips == count && ibn.zero;
            let text = format!(
                "{round_trips} of {count} random window elements (N = {bound}) decomposed and reconstructed\nK ⊗_B IG on the window: {} columns, {} nonzero entries",
                ibn.columns, ibn.nonzero_entries
            );
            Ok(outcome(&RoundTripReport { n: bound, seed, count, round_trips, ibn }, text, ok))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_codes() {
        assert_eq!(CliError::from(GroupError::UnknownGroup("X".into())).code(), 2);
        assert_eq!(CliError::from(HomologyError::SizeCap("big".into())).code(), 3);
        assert_eq!(CliError::from(HomologyError::Groupoid(GroupoidError::SizeCap("big".into()))).code(), 3);
        assert_eq!(CliError::from(ZError::Internal("x".into())).code(), 1);
        assert_eq!(CliError::from(ZError::WindowTooSmall("x".into())).code(), 2);
    }

    #[test]
    fn lists_render() {
        assert_eq!(list(&[2, 1, 1]), "(2, 1, 1)");
        assert_eq!(list(&[]), "()");
    }
}
