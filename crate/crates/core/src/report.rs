//! Rendering of analysis results as stable JSON and as plain text.
//!
//! JSON objects are built as `serde_json::Value`, whose maps are ordered by
//! key, so identical results always produce identical bytes. Subgroups are
//! listed in the order the analyses produce them (by order, then by orbit
//! partition).

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::arrays::{
    reconstruct_dual, regularity_check, verify_biregular_identities, ArrayError, ArrayTuple, IdentityCheck, LocalArray,
    Regularity, RegularityReport,
};
use crate::graphcore::{recognize_family, FamilyTag, Graph};
use crate::permgroup::{PermGroup, Permutation};
use crate::symmetry::{
    f_s_membership, g_plus, is_degenerate, is_g_basic, AnalysisConfig, BasicType, Case, ClassificationReport,
    FsVerdict, LayerWitness, QuotientRecord, ReductionChain, SymmetryError,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Results of `analyze`: membership, `G⁺` and degeneracy.
#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub n: usize,
    pub diameter: usize,
    pub group_order: u128,
    pub membership: FsVerdict,
    pub g_plus_order: u128,
    pub g_plus_index: u128,
    pub g_plus_orbits: usize,
    pub degenerate: bool,
    /// Only evaluated for members of `F(s)`.
    pub basic: Option<bool>,
    pub tags: Vec<FamilyTag>,
}

pub fn analysis_report(
    graph: &Graph,
    group: &PermGroup,
    s: usize,
    config: &AnalysisConfig,
) -> Result<AnalysisReport, SymmetryError> {
    let membership = f_s_membership(graph, group, s)?;
    let gp = g_plus(graph, group)?;
    let basic = if membership.member {
        Some(is_g_basic(graph, group, s, config)?)
    } else {
        None
    };
    Ok(AnalysisReport {
        n: graph.n(),
        diameter: graph.diameter(),
        group_order: group.order(),
        g_plus_order: gp.group.order(),
        g_plus_index: gp.index,
        g_plus_orbits: gp.orbit_count,
        degenerate: is_degenerate(graph),
        basic,
        tags: recognize_family(graph),
        membership,
    })
}

/// A tuple and its reconstructed dual, or the reason reconstruction failed.
#[derive(Clone, Debug)]
pub struct DualCheck {
    pub from: ArrayTuple,
    pub dual: Result<ArrayTuple, ArrayError>,
    /// The reconstruction equals the array computed on the other bipart.
    pub matches_graph: Option<bool>,
}

/// Results of `arrays`.
#[derive(Clone, Debug)]
pub struct ArraysReport {
    pub regularity: RegularityReport,
    pub identities: Vec<IdentityCheck>,
    pub duals: Vec<DualCheck>,
}

pub fn arrays_report(graph: &Graph, s: usize) -> Result<ArraysReport, ArrayError> {
    let regularity = regularity_check(graph, s)?;
    let mut identities = Vec::new();
    let mut duals = Vec::new();
    if let Some(pair) = &regularity.arrays {
        let unprimed = pair.unprimed.tuple();
        if let (Regularity::Biregular, Some(primed)) = (regularity.verdict, &pair.primed) {
            let primed = primed.tuple();
            identities = verify_biregular_identities(&unprimed, &primed, s);
            for (from, other) in [(&unprimed, &primed), (&primed, &unprimed)] {
                let dual = reconstruct_dual(from);
                let matches_graph = dual.as_ref().ok().map(|d| d == other);
                duals.push(DualCheck {
                    from: from.clone(),
                    dual,
                    matches_graph,
                });
            }
        } else if regularity.verdict == Regularity::Regular && graph.is_bipartite() {
            // A bipartite distance-regular graph is biregular with equal arrays.
            identities = verify_biregular_identities(&unprimed, &unprimed, s);
            let dual = reconstruct_dual(&unprimed);
            let matches_graph = dual.as_ref().ok().map(|d| *d == unprimed);
            duals.push(DualCheck {
                from: unprimed,
                dual,
                matches_graph,
            });
        }
    }
    Ok(ArraysReport {
        regularity,
        identities,
        duals,
    })
}

/// Anything the CLI can print.
#[derive(Clone, Debug)]
pub enum Report {
    Analysis(AnalysisReport),
    Classification(ClassificationReport),
    Reduction(ReductionChain),
    BasicType(BasicType),
    Arrays(ArraysReport),
    Family { tag: FamilyTag, graph: Graph },
    Automorphisms(PermGroup),
}

/// Renders a report. JSON output ends with a newline; text output is the
/// human-readable summary. For `Family` the output is a graph file.
pub fn emit_report(report: &Report, format: Format) -> String {
    match (report, format) {
        (Report::Family { graph, .. }, Format::Text) => crate::graphcore::write_graph_text(graph),
        (Report::Family { graph, .. }, Format::Json) => {
            let mut out = crate::graphcore::write_graph_json(graph);
            out.push('\n');
            out
        }
        (Report::Automorphisms(g), Format::Text) => crate::permgroup::write_group(g),
        (_, Format::Json) => {
            let mut out = serde_json::to_string_pretty(&report_json(report)).expect("values always serialise");
            out.push('\n');
            out
        }
        (_, Format::Text) => report_text(report),
    }
}

pub fn report_json(report: &Report) -> Value {
    match report {
        Report::Analysis(r) => analysis_json(r),
        Report::Classification(r) => classification_json(r),
        Report::Reduction(r) => reduction_json(r),
        Report::BasicType(r) => basic_type_json(r),
        Report::Arrays(r) => arrays_json(r),
        Report::Family { tag, graph } => json!({ "tag": tag.to_string(), "graph": graph_json(graph) }),
        Report::Automorphisms(g) => group_json(g),
    }
}

/// `{"error": {"code", "message"}}`.
pub fn error_json(code: &str, message: &str) -> String {
    let mut out = serde_json::to_string_pretty(&json!({ "error": { "code": code, "message": message } }))
        .expect("values always serialise");
    out.push('\n');
    out
}

/// Group orders can exceed `u64`; those are written as decimal strings.
fn order_json(order: u128) -> Value {
    u64::try_from(order).map_or_else(|_| Value::String(order.to_string()), Value::from)
}

fn perm_cycles(p: &Permutation) -> String {
    p.to_string()
}

pub fn group_json(g: &PermGroup) -> Value {
    json!({
        "degree": g.degree(),
        "order": order_json(g.order()),
        "generators": g.generators().iter().map(perm_cycles).collect::<Vec<_>>(),
    })
}

pub fn graph_json(g: &Graph) -> Value {
    json!({
        "n": g.n(),
        "edges": g.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
    })
}

/// Display names of the tags, without repeats (`Complete { n: 2 }` and `K2`
/// print the same).
fn tag_names(tags: &[FamilyTag]) -> Vec<String> {
    let mut names: Vec<String> = Vec::with_capacity(tags.len());
    for t in tags {
        let name = t.to_string();
        if !names.contains(&name) {
            names.push(name);
        }
    }
    names
}

fn tags_json(tags: &[FamilyTag]) -> Value {
    tag_names(tags).into()
}

fn tags_text(tags: &[FamilyTag]) -> String {
    tag_names(tags).join(", ")
}

fn witness_json(w: &Option<LayerWitness>) -> Value {
    w.map_or(
        Value::Null,
        |w| json!({ "vertex": w.vertex, "layer": w.layer, "y1": w.y1, "y2": w.y2 }),
    )
}

fn witness_text(w: &LayerWitness) -> String {
    format!(
        "witness (v, i, y1, y2) = ({}, {}, {}, {}): {} and {} lie at distance {} from {} but in different stabiliser orbits",
        w.vertex, w.layer, w.y1, w.y2, w.y1, w.y2, w.layer, w.vertex
    )
}

fn analysis_json(r: &AnalysisReport) -> Value {
    json!({
        "n": r.n,
        "diameter": r.diameter,
        "group_order": order_json(r.group_order),
        "tags": tags_json(&r.tags),
        "membership": {
            "member": r.membership.member,
            "s": r.membership.s_requested,
            "s_effective": r.membership.s_effective,
            "witness": witness_json(&r.membership.failure_witness),
        },
        "g_plus": {
            "order": order_json(r.g_plus_order),
            "index": order_json(r.g_plus_index),
            "orbits": r.g_plus_orbits,
        },
        "degenerate": r.degenerate,
        "basic": r.basic,
    })
}

fn record_json(r: &QuotientRecord) -> Value {
    json!({
        "normal": group_json(&r.normal),
        "orbits": r.orbits.blocks(),
        "quotient": graph_json(&r.quotient),
        "quotient_tags": tags_json(&r.quotient_tags),
        "blocks_with_internal_edges": r.blocks_with_internal_edges,
        "induced": group_json(&r.induced),
        "kernel": group_json(&r.kernel),
        "cover": r.is_cover,
        "degenerate": r.degenerate,
        "semiregular": r.semiregular,
        "in_family": r.in_family,
    })
}

fn classification_json(r: &ClassificationReport) -> Value {
    let hint = r.chosen_record().map_or(Value::Null, |c| {
        json!({
            "survey_index": r.chosen,
            "normal_order": order_json(c.normal_order),
            "quotient_tags": tags_json(&c.quotient_tags),
            "next": "reduce",
        })
    });
    let multipartite = r.multipartite.as_ref().map_or(Value::Null, |m| {
        json!({
            "parts": m.parts.blocks(),
            "kernel": group_json(&m.kernel),
        })
    });
    json!({
        "case": r.case.letter(),
        "description": r.case.description(),
        "s": r.s,
        "survey": r.survey.iter().map(record_json).collect::<Vec<_>>(),
        "chain_hint": hint,
        "multipartite": multipartite,
    })
}

fn reduction_json(r: &ReductionChain) -> Value {
    let steps: Vec<Value> = r
        .steps
        .iter()
        .map(|st| {
            json!({
                "normal": group_json(&st.normal),
                "orbits": st.orbits.blocks(),
                "quotient": graph_json(&st.quotient),
                "quotient_tags": tags_json(&st.quotient_tags),
                "induced": group_json(&st.induced),
                "cover": st.is_cover,
                "semiregular": st.semiregular,
            })
        })
        .collect();
    json!({
        "steps": steps,
        "final": {
            "graph": graph_json(&r.final_graph),
            "group": group_json(&r.final_group),
            "tags": tags_json(&recognize_family(&r.final_graph)),
            "basic": r.final_basic,
        },
        "survey_size": r.survey.len(),
    })
}

fn basic_type_json(r: &BasicType) -> Value {
    let mut v = serde_json::to_value(r).expect("values always serialise");
    v["g_plus_index"] = order_json(r.g_plus_index);
    v
}

fn local_array_json(a: &LocalArray) -> Value {
    json!({
        "base": a.base,
        "a": a.a,
        "b": a.b,
        "c": a.c,
        "side": a.side,
        "tuple": a.tuple().to_string(),
    })
}

fn arrays_json(r: &ArraysReport) -> Value {
    let reg = &r.regularity;
    let arrays = reg.arrays.as_ref().map_or(Value::Null, |p| {
        json!({
            "unprimed": local_array_json(&p.unprimed),
            "primed": p.primed.as_ref().map_or(Value::Null, local_array_json),
        })
    });
    let ill = reg.ill_defined.as_ref().map_or(
        Value::Null,
        |(x, w)| json!({ "base": x, "witness": serde_json::to_value(w).expect("values always serialise") }),
    );
    let duals: Vec<Value> = r
        .duals
        .iter()
        .map(|d| {
            json!({
                "from": d.from.to_string(),
                "dual": d.dual.as_ref().map_or(Value::Null, |t| Value::String(t.to_string())),
                "error": d.dual.as_ref().err().map(|e| e.to_string()),
                "matches_graph": d.matches_graph,
            })
        })
        .collect();
    json!({
        "verdict": reg.verdict,
        "s": reg.s,
        "arrays": arrays,
        "disagreement": reg.disagreement,
        "ill_defined": ill,
        "identities": serde_json::to_value(&r.identities).expect("values always serialise"),
        "identities_pass": r.identities.iter().all(|c| c.passes()),
        "duals": duals,
    })
}

fn group_line(g: &PermGroup) -> String {
    let gens: Vec<String> = g.generators().iter().map(perm_cycles).collect();
    let gens = if gens.is_empty() {
        "()".to_string()
    } else {
        gens.join(", ")
    };
    format!("order {}, generators {gens}", g.order())
}

fn edges_line(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("{} vertices, edges [{}]", g.n(), edges.join(" "))
}

fn report_text(report: &Report) -> String {
    let mut out = String::new();
    match report {
        Report::Analysis(r) => {
            let m = &r.membership;
            let _ = writeln!(
                out,
                "graph: {} vertices, diameter {}, family {}",
                r.n,
                r.diameter,
                tags_text(&r.tags)
            );
            let _ = writeln!(out, "group order: {}", r.group_order);
            if m.member {
                let _ = writeln!(
                    out,
                    "member of F({}) (checked with s' = {})",
                    m.s_requested, m.s_effective
                );
            } else {
                let _ = writeln!(
                    out,
                    "not a member of F({}) (checked with s' = {})",
                    m.s_requested, m.s_effective
                );
                if let Some(w) = &m.failure_witness {
                    let _ = writeln!(out, "{}", witness_text(w));
                }
            }
            let _ = writeln!(
                out,
                "G+: order {}, index {}, {} orbit(s)",
                r.g_plus_order, r.g_plus_index, r.g_plus_orbits
            );
            let _ = writeln!(out, "degenerate: {}", r.degenerate);
            match r.basic {
                Some(b) => {
                    let _ = writeln!(out, "basic: {b}");
                }
                None => {
                    let _ = writeln!(out, "basic: not evaluated (not a member)");
                }
            }
        }
        Report::Classification(r) => {
            let _ = writeln!(
                out,
                "reduction theorem, case ({}): {}",
                r.case.letter(),
                r.case.description()
            );
            if let Some(m) = &r.multipartite {
                let _ = writeln!(
                    out,
                    "complete multipartite graph with {} parts; kernel of G on the parts has order {}",
                    m.parts.len(),
                    m.kernel.order()
                );
            }
            let _ = writeln!(out, "normal quotients surveyed: {}", r.survey.len());
            for (i, rec) in r.survey.iter().enumerate() {
                let mark = if r.chosen == Some(i) {
                    " <- maximal nondegenerate"
                } else {
                    ""
                };
                let _ = writeln!(
                    out,
                    "  |N| = {:<6} {:>3} orbits  quotient {:<12} cover={} semiregular={} degenerate={}{mark}",
                    rec.normal_order,
                    rec.orbits.len(),
                    tags_text(&rec.quotient_tags),
                    rec.is_cover,
                    rec.semiregular,
                    rec.degenerate
                );
            }
            if r.case == Case::CoverOfBasic {
                let _ = writeln!(out, "run `reduce` for the reduction to a basic quotient");
            }
        }
        Report::Reduction(r) => {
            for (i, st) in r.steps.iter().enumerate() {
                let _ = writeln!(out, "step {}: quotient by N ({})", i + 1, group_line(&st.normal));
                let _ = writeln!(
                    out,
                    "  quotient {}: {}",
                    tags_text(&st.quotient_tags),
                    edges_line(&st.quotient)
                );
                let _ = writeln!(out, "  induced group: {}", group_line(&st.induced));
                let _ = writeln!(out, "  cover: {}, N semiregular: {}", st.is_cover, st.semiregular);
            }
            let _ = writeln!(
                out,
                "final graph {} is basic relative to the induced group: {}",
                tags_text(&recognize_family(&r.final_graph)),
                r.final_basic
            );
        }
        Report::BasicType(r) => {
            let _ = writeln!(out, "basic graph, case ({}): {}", r.case.numeral(), basic_case_text(r));
            if let Some(kind) = r.group_kind {
                let _ = writeln!(
                    out,
                    "G on the vertices: {}",
                    serde_json::to_value(kind).unwrap().as_str().unwrap()
                );
            }
            let _ = writeln!(out, "|G : G+| = {}", r.g_plus_index);
            for (i, o) in r.orbits.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "orbit {i}: {} vertices, faithful={}, quasiprimitive={}",
                    o.vertices.len(),
                    o.faithful,
                    o.quasiprimitive
                );
            }
            let g = &r.g_not_g_plus;
            let _ = writeln!(
                out,
                "basic but not G+-basic: {}; structural condition: {}",
                g.basic_not_plus_basic, g.structural_condition
            );
        }
        Report::Arrays(r) => arrays_text(&mut out, r),
        Report::Family { .. } | Report::Automorphisms(_) => unreachable!("written as files"),
    }
    out
}

fn basic_case_text(r: &BasicType) -> &'static str {
    use crate::symmetry::BasicCase::*;
    match r.case {
        CompleteBipartite => "complete bipartite K_{m,n}",
        Quasiprimitive => "G quasiprimitive on the vertices",
        BiquasiprimitiveBipartite => "bipartite, G biquasiprimitive, G+ faithful on each bipart",
        FaithfulBiparts => "bipartite, G = G+ faithful on both biparts, quasiprimitive on at least one",
    }
}

fn arrays_text(out: &mut String, r: &ArraysReport) {
    let reg = &r.regularity;
    let verdict = match reg.verdict {
        Regularity::Regular => "s-distance regular",
        Regularity::Biregular => "s-distance biregular",
        Regularity::Neither => "neither regular nor biregular",
    };
    let _ = writeln!(out, "{verdict} (s = {})", reg.s);
    if let Some(p) = &reg.arrays {
        let _ = writeln!(out, "ι = {}", p.unprimed.tuple());
        if let Some(q) = &p.primed {
            let _ = writeln!(out, "ι' = {}", q.tuple());
        }
        let a: Vec<String> = p.unprimed.a.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "a = ({})", a.join(","));
    }
    if let Some((x, y)) = reg.disagreement {
        let _ = writeln!(out, "vertices {x} and {y} have different arrays");
    }
    if let Some((x, w)) = &reg.ill_defined {
        let _ = writeln!(out, "array at {x} is ill-defined: {w:?}");
    }
    if !r.identities.is_empty() {
        let failed = r.identities.iter().filter(|c| !c.passes()).count();
        let _ = writeln!(
            out,
            "identity checks: {} instances, {failed} failed",
            r.identities.len()
        );
        for c in &r.identities {
            let status = if c.vacuous {
                "vacuous"
            } else if c.holds {
                "ok"
            } else {
                "FAILED"
            };
            let _ = writeln!(out, "  {:<7} {} ({} vs {})", status, c.statement, c.lhs, c.rhs);
        }
    }
    for d in &r.duals {
        match &d.dual {
            Ok(t) => {
                let check = match d.matches_graph {
                    Some(true) => " (matches the graph)",
                    Some(false) => " (DIFFERS from the graph)",
                    None => "",
                };
                let _ = writeln!(out, "dual of {} = {t}{check}", d.from);
            }
            Err(e) => {
                let _ = writeln!(out, "dual of {}: {e}", d.from);
            }
        }
    }
}
