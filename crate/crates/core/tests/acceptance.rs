//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! run with `cargo test --test acceptance -- --nocapture` to see them.
//! Every comparison is exact (integer counts, sets, verdicts); there are no
//! floating-point tolerances anywhere in this suite.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use common::*;
use ldt_core::arrays::{reconstruct_dual, regularity_check, verify_biregular_identities, ArrayTuple, Regularity};
use ldt_core::graphcore::{FamilyTag, Girth, Graph};
use ldt_core::permgroup::{qp_classification, Caps, PermGroup, QpKind};
use ldt_core::symmetry::*;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn survey_types(
    g: &Graph,
    group: &PermGroup,
    s: usize,
    skip_degenerate: bool,
) -> Result<BTreeSet<Vec<FamilyTag>>, String> {
    let records = normal_quotient_survey(g, group, s, &config()).map_err(|e| e.to_string())?;
    Ok(records
        .iter()
        .filter(|r| !(skip_degenerate && r.degenerate))
        .map(|r| r.quotient_tags.clone())
        .collect())
}

fn types(tags: impl IntoIterator<Item = FamilyTag>) -> BTreeSet<Vec<FamilyTag>> {
    tags.into_iter().map(type_of).collect()
}

fn basic(g: &Graph, group: &PermGroup, s: usize) -> Result<bool, String> {
    is_g_basic(g, group, s, &config()).map_err(|e| e.to_string())
}

fn member(g: &Graph, group: &PermGroup, s: usize) -> Result<FsVerdict, String> {
    f_s_membership(g, group, s).map_err(|e| e.to_string())
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn criterion_1() -> Outcome {
    for t in 5..=24usize {
        let c = cycle(t);
        let got = survey_types(&c, &aut(&c), 2, false)?;
        let mut want = vec![FamilyTag::K1];
        want.extend((3..t).filter(|d| t % d == 0).map(|d| FamilyTag::Cycle { t: d }));
        if t % 2 == 0 {
            want.push(FamilyTag::K2);
        }
        ensure!(got == types(want), "C{t} under Aut: got {got:?}");

        if t % 2 == 0 {
            let got = survey_types(&c, &aut_plus(&c), 2, false)?;
            let mut want = vec![FamilyTag::K2];
            want.extend(
                (2..t / 2)
                    .filter(|d| t % (2 * d) == 0)
                    .map(|d| FamilyTag::Cycle { t: 2 * d }),
            );
            if t % 4 == 0 {
                want.push(FamilyTag::Star { r: 2 });
            }
            ensure!(got == types(want), "C{t} under Aut+: got {got:?}");
        }
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    for t in 5..=24usize {
        let c = cycle(t);
        let full = basic(&c, &aut(&c), 2)?;
        ensure!(full == is_prime(t), "C{t} Aut-basic = {full}");
        if t % 2 == 0 {
            let plus = basic(&c, &aut_plus(&c), 2)?;
            ensure!(plus == is_prime(t / 2), "C{t} Aut+-basic = {plus}");
        }
    }
    let c10 = cycle(10);
    ensure!(
        basic(&c10, &aut_plus(&c10), 2)? && !basic(&c10, &aut(&c10), 2)?,
        "C10 basicness"
    );
    Ok(())
}

fn criterion_3() -> Outcome {
    for n in 3..=7 {
        let k = complete(n);
        let g = symmetric(n);
        for s in 1..=3 {
            ensure!(member(&k, &g, s)?.member, "K{n} not in F({s})");
            ensure!(basic(&k, &g, s)?, "K{n} not basic at s={s}");
        }
        let got = survey_types(&k, &g, 2, false)?;
        ensure!(got == types([FamilyTag::K1]), "K{n} survey {got:?}");
    }
    let k5 = complete(5);
    let agl = agl15();
    ensure!(agl.order() == 20, "AGL(1,5) order {}", agl.order());
    ensure!(member(&k5, &agl, 1)?.member, "K5 not in F(1) under AGL(1,5)");
    ensure!(basic(&k5, &agl, 1)?, "K5 not AGL(1,5)-basic");
    Ok(())
}

fn criterion_4() -> Outcome {
    for (m, n) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
        let g = kmn(m, n);
        let group = sym_product(m, n);
        let v = member(&g, &group, 2)?;
        ensure!(v.member && v.s_effective == 2, "K{m},{n} membership {v:?}");
        let got = survey_types(&g, &group, 2, false)?;
        let want = types([FamilyTag::K2, FamilyTag::Star { r: m }, FamilyTag::Star { r: n }]);
        ensure!(got == want, "K{m},{n} survey {got:?}");
        let t = basic_type(&g, &group, 2, &config()).map_err(|e| e.to_string())?;
        ensure!(
            t.case == BasicCase::CompleteBipartite,
            "K{m},{n} basic type {:?}",
            t.case
        );
        if m == n {
            let swap = sym_wreath_two(n);
            let got = survey_types(&g, &swap, 2, false)?;
            ensure!(
                got == types([FamilyTag::K1, FamilyTag::K2]),
                "K{n},{n} with swap: {got:?}"
            );
            let t = basic_type(&g, &swap, 2, &config()).map_err(|e| e.to_string())?;
            ensure!(
                t.case == BasicCase::CompleteBipartite,
                "K{n},{n} with swap: {:?}",
                t.case
            );
        }
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let oct = octahedron();
    let group = aut(&oct);
    ensure!(group.order() == 48, "|S2 wr S3| = {}", group.order());
    let report = classify(&oct, &group, 2, &config()).map_err(|e| e.to_string())?;
    ensure!(report.case == Case::MultipartiteException, "case {:?}", report.case);
    let kernel = report.multipartite.as_ref().map(|m| m.kernel.order());
    ensure!(kernel == Some(8), "kernel on parts {kernel:?}");
    let nondegenerate: BTreeSet<_> = report
        .survey
        .iter()
        .filter(|r| !r.degenerate)
        .map(|r| r.quotient_tags.clone())
        .collect();
    ensure!(
        nondegenerate == types([FamilyTag::Complete { n: 3 }]),
        "nondegenerate types {nondegenerate:?}"
    );
    let bad = report.survey.iter().any(|r| {
        r.is_cover
            && r.quotient_tags
                .iter()
                .any(|t| matches!(t, FamilyTag::CompleteMultipartite { .. }))
    });
    ensure!(!bad, "a cover over a complete multipartite quotient");
    Ok(())
}

fn criterion_6() -> Outcome {
    let c12 = cycle(12);
    let group = aut(&c12);
    ensure!(group.order() == 24, "|D24| = {}", group.order());
    let chain = reduce_to_basic(&c12, &group, 2, &config()).map_err(|e| e.to_string())?;
    ensure!(chain.steps.len() == 1, "{} steps", chain.steps.len());
    let step = &chain.steps[0];
    ensure!(step.normal.order() == 4, "|N| = {}", step.normal.order());
    ensure!(
        type_key(&step.quotient) == type_of(FamilyTag::Cycle { t: 3 }),
        "quotient {:?}",
        type_key(&step.quotient)
    );
    ensure!(step.induced.order() == 6, "induced order {}", step.induced.order());
    ensure!(
        step.is_cover && step.semiregular && step.normal.is_semiregular(),
        "cover/semiregular"
    );
    ensure!(
        basic(&chain.final_graph, &chain.final_group, 2)?,
        "final pair not basic"
    );
    Ok(())
}

fn criterion_7() -> Outcome {
    let caps = Caps::default();
    let qp = |g: &PermGroup| qp_classification(g, &caps).map_err(|e| e.to_string());
    ensure!(qp(&symmetric(4))?.kind == QpKind::Quasiprimitive, "S4");
    let d8 = aut(&cycle(4));
    ensure!(d8.order() == 8 && qp(&d8)?.kind == QpKind::Biquasiprimitive, "D8");
    let d24 = aut(&cycle(12));
    let v = qp(&d24)?;
    let orbits = v.witness.as_ref().map(|w| w.orbits().len());
    ensure!(
        v.kind == QpKind::Neither && orbits == Some(6),
        "D24: {:?} with {orbits:?} orbits",
        v.kind
    );

    let mut fixtures: Vec<PermGroup> = vec![symmetric(4), d8, d24, agl15(), petersen_s5(), aut(&q3())];
    fixtures.extend((3..=7).map(symmetric));
    fixtures.extend((5..=24).map(|t| aut(&cycle(t))));
    fixtures.extend((5..=24).filter(|t| t % 2 == 0).map(|t| aut_plus(&cycle(t))));
    fixtures.extend((3..=12).map(rotations));
    fixtures.extend([sym_wreath_two(2), sym_wreath_two(3), aut(&octahedron())]);
    let mut checked = 0;
    for g in fixtures.iter().filter(|g| g.order() <= 200 && g.is_transitive()) {
        let v = qp(g)?;
        let (kind, worst) = oracle_qp(g);
        let ours = match v.kind {
            QpKind::Quasiprimitive => 0,
            QpKind::Biquasiprimitive => 1,
            QpKind::Neither => 2,
        };
        ensure!(
            ours == kind,
            "order {} degree {}: {:?} vs oracle {kind}",
            g.order(),
            g.degree(),
            v.kind
        );
        let witness = v.witness.as_ref().map_or(1, |w| w.orbits().len());
        ensure!(witness == worst, "witness orbits {witness} vs oracle {worst}");
        checked += 1;
    }
    ensure!(checked >= 40, "only {checked} groups cross-checked");
    Ok(())
}

fn criterion_8() -> Outcome {
    let rep = regularity_check(&q3(), 3).map_err(|e| e.to_string())?;
    ensure!(rep.verdict == Regularity::Regular, "Q3 {:?}", rep.verdict);
    let arr = rep.arrays.unwrap().unprimed;
    ensure!(arr.b == [3, 2, 1, 0] && arr.c == [1, 2, 3], "Q3 array {}", arr.tuple());
    ensure!(
        oracle_layer_counts(&q3(), 0, 3) == (arr.b.clone(), arr.c.clone()),
        "Q3 oracle"
    );

    let rep = regularity_check(&pet(), 2).map_err(|e| e.to_string())?;
    ensure!(rep.verdict == Regularity::Regular, "Petersen {:?}", rep.verdict);
    let arr = rep.arrays.unwrap().unprimed;
    ensure!(arr.a[2] == 2, "Petersen a2 = {}", arr.a[2]);
    ensure!(
        oracle_layer_counts(&pet(), 0, 2) == (arr.b.clone(), arr.c.clone()),
        "Petersen oracle"
    );

    let k23 = kmn(2, 3);
    let rep = regularity_check(&k23, 2).map_err(|e| e.to_string())?;
    ensure!(rep.verdict == Regularity::Biregular, "K2,3 {:?}", rep.verdict);
    let pair = rep.arrays.unwrap();
    let (iota, iota_p) = (pair.unprimed.tuple(), pair.primed.unwrap().tuple());
    let want: ArrayTuple = "(3,1,0;1,3)"
        .parse()
        .map_err(|e: ldt_core::arrays::ArrayError| e.to_string())?;
    let want_p: ArrayTuple = "(2,2,0;1,2)"
        .parse()
        .map_err(|e: ldt_core::arrays::ArrayError| e.to_string())?;
    ensure!(iota == want && iota_p == want_p, "K2,3 arrays {iota} / {iota_p}");
    ensure!(
        oracle_layer_counts(&k23, 0, 2) == (iota.b.clone(), iota.c.clone()),
        "K2,3 oracle"
    );
    ensure!(
        oracle_layer_counts(&k23, 2, 2) == (iota_p.b.clone(), iota_p.c.clone()),
        "K2,3 primed oracle"
    );
    let failed: Vec<_> = verify_biregular_identities(&iota, &iota_p, 2)
        .into_iter()
        .filter(|c| !c.passes())
        .collect();
    ensure!(failed.is_empty(), "identity failures {failed:?}");

    for g in [kmn(2, 3), kmn(3, 3), cycle(6)] {
        let s = g.diameter();
        let pair = regularity_check(&g, s).map_err(|e| e.to_string())?.arrays.unwrap();
        let a = pair.unprimed.tuple();
        let b = pair.primed.as_ref().unwrap_or(&pair.unprimed).tuple();
        let there = reconstruct_dual(&a).map_err(|e| e.to_string())?;
        let back = reconstruct_dual(&b).map_err(|e| e.to_string())?;
        ensure!(
            there == b && back == a,
            "dual round trip {a} <-> {b}: got {there} / {back}"
        );
    }
    Ok(())
}

/// `b_i` and `c_i` counted directly from a Floyd–Warshall distance matrix.
fn oracle_layer_counts(g: &Graph, x: usize, s: usize) -> (Vec<u64>, Vec<u64>) {
    let d = oracle_distances(g);
    let layer = |i: usize| (0..g.n()).filter(|&y| d[x][y] == i).collect::<Vec<_>>();
    let count = |y: usize, dist: usize| (0..g.n()).filter(|&z| d[y][z] == 1 && d[x][z] == dist).count() as u64;
    let b = (0..=s)
        .map(|i| layer(i).first().map_or(0, |&y| count(y, i + 1)))
        .collect();
    let c = (1..=s)
        .map(|i| layer(i).first().map_or(0, |&y| count(y, i - 1)))
        .collect();
    (b, c)
}

fn criterion_9() -> Outcome {
    for (name, g, girth) in [("Petersen", pet(), 5), ("Heawood", hea(), 6)] {
        ensure!(g.girth() == Girth::Finite(girth), "{name} girth {}", g.girth());
        let group = aut(&g);
        let bound = g.girth().arc_bound().unwrap();
        ensure!(bound == (girth - 1) / 2, "{name} arc bound {bound}");
        for s in 1..=bound {
            let ldt = local_distance_transitivity(&g, &group, s)
                .map_err(|e| e.to_string())?
                .holds;
            let arc = local_s_arc_transitivity(&g, &group, s).map_err(|e| e.to_string())?;
            ensure!(ldt == arc, "{name} s={s}: distance {ldt}, arc {arc}");
        }
    }
    Ok(())
}

/// The fixture pairs of this suite with an `s` at which they lie in `F(s)`.
fn closure_fixtures() -> Vec<(String, Graph, PermGroup, usize)> {
    let mut out: Vec<(String, Graph, PermGroup, usize)> = Vec::new();
    for t in 5..=24 {
        let c = cycle(t);
        out.push((format!("C{t}/Aut"), c.clone(), aut(&c), 2));
        if t % 2 == 0 {
            out.push((format!("C{t}/Aut+"), c.clone(), aut_plus(&c), 2));
        }
    }
    for n in 3..=7 {
        out.push((format!("K{n}/S{n}"), complete(n), symmetric(n), 2));
    }
    out.push(("K5/AGL(1,5)".into(), complete(5), agl15(), 1));
    for (m, n) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
        out.push((format!("K{m},{n}"), kmn(m, n), sym_product(m, n), 2));
        if m == n {
            out.push((format!("K{n},{n} with swap"), kmn(m, n), sym_wreath_two(n), 2));
        }
    }
    out.push(("K3[2]".into(), octahedron(), aut(&octahedron()), 2));
    out.push(("Q3".into(), q3(), aut(&q3()), 3));
    out.push(("Petersen".into(), pet(), petersen_s5(), 2));
    out.push(("Heawood".into(), hea(), aut(&hea()), 3));
    out
}

fn criterion_10() -> Outcome {
    let mut records = 0;
    for (name, g, group, s) in closure_fixtures() {
        ensure!(member(&g, &group, s)?.member, "{name} is not in F({s})");
        let survey = normal_quotient_survey(&g, &group, s, &config()).map_err(|e| e.to_string())?;
        for r in &survey {
            ensure!(
                member(&r.quotient, &r.induced, s)?.member,
                "{name}: quotient by |N|={} fails",
                r.normal_order
            );
            records += 1;
        }
        if !g.is_bipartite() {
            continue;
        }
        let s_eff = s.min(g.diameter());
        let gp = g_plus(&g, &group).map_err(|e| e.to_string())?.group;
        let comps = g.distance_two_components().map_err(|e| e.to_string())?;
        for comp in &comps {
            let restricted = gp.restrict_to(&comp.vertices).map_err(|e| e.to_string())?;
            // Layers past the component's diameter are empty.
            let level = (s_eff / 2).min(comp.graph.diameter());
            if level > 0 {
                let v = local_distance_transitivity(&comp.graph, &restricted, level).map_err(|e| e.to_string())?;
                ensure!(v.holds, "{name}: distance-2 component fails at level {level}");
            }
        }
        if name == "Q3" {
            let k4 = type_of(FamilyTag::Complete { n: 4 });
            ensure!(
                comps.iter().all(|c| type_key(&c.graph) == k4),
                "Q3 distance-2 graph is not 2K4"
            );
        }
    }
    ensure!(records > 100, "only {records} records checked");
    Ok(())
}

fn criterion_11() -> Outcome {
    // The existence results for biquasiprimitive examples and the girth-bound
    // corollaries rest on external theorems and are not reproduced. What is
    // checked is that the predicates they refer to are present and exercised
    // above: quasiprimitivity (7), girth and the distance/arc equivalence (9).
    ensure!(
        pet().girth() == Girth::Finite(5) && hea().girth() == Girth::Finite(6),
        "girth predicate"
    );
    ensure!(
        qp_classification(&symmetric(3), &Caps::default()).is_ok(),
        "quasiprimitivity predicate"
    );
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("cycle normal-quotient table, t = 5..24", criterion_1),
        ("basicness of cycles", criterion_2),
        ("complete graphs and AGL(1,5)", criterion_3),
        ("complete bipartite graphs", criterion_4),
        ("multipartite exception on the octahedron", criterion_5),
        ("reduction of C12 under D24", criterion_6),
        ("quasiprimitivity engine vs subgroup oracle", criterion_7),
        ("intersection arrays and dual reconstruction", criterion_8),
        ("distance/arc equivalence below the girth bound", criterion_9),
        (
            "closure of F(s) under normal quotients; distance-2 graphs",
            criterion_10,
        ),
        (
            "scope: external existence results not reproduced (statement)",
            criterion_11,
        ),
    ];
    let mut failures = Vec::new();
    for (i, (label, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match &outcome {
            Ok(()) => println!("criterion {:>2}: PASS  [tolerance: exact] {label} ({ms} ms)", i + 1),
            Err(why) => {
                println!(
                    "criterion {:>2}: FAIL  [tolerance: exact] {label} ({ms} ms): {why}",
                    i + 1
                );
                failures.push(i + 1);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
