mod common;

use std::collections::BTreeSet;

use common::*;
use ldt_core::graphcore::{FamilyTag, Graph};
use ldt_core::permgroup::{PermGroup, Permutation};
use ldt_core::symmetry::*;
use proptest::prelude::*;

fn survey_types(g: &Graph, group: &PermGroup, s: usize) -> BTreeSet<Vec<FamilyTag>> {
    normal_quotient_survey(g, group, s, &config())
        .unwrap()
        .iter()
        .map(|r| r.quotient_tags.clone())
        .collect()
}

fn types(tags: &[FamilyTag]) -> BTreeSet<Vec<FamilyTag>> {
    tags.iter().map(|&t| type_of(t)).collect()
}

#[test]
fn ldt_examples() {
    let c12 = cycle(12);
    assert!(local_distance_transitivity(&c12, &aut(&c12), 6).unwrap().holds);
    let v = local_distance_transitivity(&c12, &rotations(12), 1).unwrap();
    assert!(!v.holds);
    let w = v.witness.unwrap();
    assert_eq!((w.vertex, w.layer), (0, 1));
    assert_eq!((w.y1, w.y2), (1, 11));
    assert!(local_distance_transitivity(&pet(), &petersen_s5(), 2).unwrap().holds);
    let v = local_distance_transitivity(&pet(), &petersen_s5(), 3).unwrap();
    assert!(!v.holds && v.exceeds_diameter && v.witness.is_none());
}

#[test]
fn non_automorphisms_are_rejected() {
    let bad = PermGroup::new(vec![cycles(6, &[&[0, 1]])], 6).unwrap();
    match f_s_membership(&cycle(6), &bad, 1) {
        Err(SymmetryError::NotAutomorphisms { generator: 0, .. }) => {}
        other => panic!("unexpected {other:?}"),
    }
    assert!(matches!(
        f_s_membership(&cycle(6), &rotations(5), 1),
        Err(SymmetryError::DegreeMismatch { graph: 6, group: 5 })
    ));
    assert!(matches!(
        f_s_membership(&cycle(6), &rotations(6), 0),
        Err(SymmetryError::SZero)
    ));
}

#[test]
fn membership_examples() {
    let v = f_s_membership(&kmn(3, 3), &sym_product(3, 3), 5).unwrap();
    assert!(v.member);
    assert_eq!((v.s_requested, v.s_effective), (5, 2));
    let k1 = complete(1);
    for s in 1..4 {
        let v = f_s_membership(&k1, &PermGroup::trivial(1), s).unwrap();
        assert!(v.member);
        assert_eq!(v.s_effective, 0);
    }
    let p4 = path(4);
    let g = aut(&p4);
    assert_eq!(g.order(), 2);
    let v = f_s_membership(&p4, &g, 2).unwrap();
    assert!(!v.member);
    let w = v.failure_witness.unwrap();
    assert_eq!(w.layer, 1);
    assert!(w.vertex == 1 || w.vertex == 2);
}

#[test]
fn orbit_count_examples() {
    assert!(orbit_count_criterion(&kmn(2, 3), &sym_product(2, 3)).unwrap());
    assert!(!orbit_count_criterion(&cycle(12), &rotations(12)).unwrap());
    assert!(orbit_count_criterion(&complete(5), &symmetric(5)).unwrap());
}

#[test]
fn g_plus_examples() {
    let gp = g_plus(&pet(), &petersen_s5()).unwrap();
    assert_eq!((gp.group.order(), gp.index), (120, 1));
    let c12 = cycle(12);
    let gp = g_plus(&c12, &aut(&c12)).unwrap();
    assert_eq!((gp.group.order(), gp.index, gp.orbit_count), (12, 2, 2));
    let gp = g_plus(&kmn(2, 3), &sym_product(2, 3)).unwrap();
    assert_eq!((gp.group.order(), gp.index, gp.orbit_count), (12, 1, 2));
}

#[test]
fn degeneracy_examples() {
    assert!(is_degenerate(&star(7)));
    assert!(is_degenerate(&complete(2)));
    assert!(is_degenerate(&complete(1)));
    assert!(!is_degenerate(&cycle(4)));
}

#[test]
fn survey_examples() {
    let c12 = cycle(12);
    assert_eq!(
        survey_types(&c12, &aut(&c12), 2),
        types(&[
            FamilyTag::K1,
            FamilyTag::K2,
            FamilyTag::Cycle { t: 3 },
            FamilyTag::Cycle { t: 4 },
            FamilyTag::Cycle { t: 6 }
        ])
    );
    assert_eq!(
        survey_types(&kmn(3, 3), &sym_product(3, 3), 2),
        types(&[FamilyTag::K2, FamilyTag::Star { r: 3 }])
    );
    assert_eq!(survey_types(&complete(5), &symmetric(5), 2), types(&[FamilyTag::K1]));
}

#[test]
fn survey_is_ordered_and_schedule_independent() {
    let c12 = cycle(12);
    let g = aut(&c12);
    let par = normal_quotient_survey(&c12, &g, 2, &config()).unwrap();
    let seq = normal_quotient_survey(
        &c12,
        &g,
        2,
        &AnalysisConfig {
            parallel: false,
            ..config()
        },
    )
    .unwrap();
    assert_eq!(par.len(), seq.len());
    for (a, b) in par.iter().zip(&seq) {
        assert_eq!(a.normal_order, b.normal_order);
        assert_eq!(a.orbits, b.orbits);
    }
    assert!(par
        .windows(2)
        .all(|w| (w[0].normal_order, &w[0].orbits) <= (w[1].normal_order, &w[1].orbits)));
}

#[test]
fn basicness_examples() {
    let c10 = cycle(10);
    assert!(is_g_basic(&c10, &aut_plus(&c10), 2, &config()).unwrap());
    assert!(!is_g_basic(&c10, &aut(&c10), 2, &config()).unwrap());
    assert!(is_g_basic(&complete(5), &symmetric(5), 2, &config()).unwrap());
}

#[test]
fn classify_examples() {
    let oct = octahedron();
    let report = classify(&oct, &aut(&oct), 2, &config()).unwrap();
    assert_eq!(report.case, Case::MultipartiteException);
    let mp = report.multipartite.unwrap();
    assert_eq!(mp.kernel.order(), 8);
    assert_eq!(mp.parts.len(), 3);

    let c12 = cycle(12);
    let report = classify(&c12, &aut(&c12), 2, &config()).unwrap();
    assert_eq!(report.case, Case::CoverOfBasic);
    let chosen = report.chosen_record().unwrap();
    assert!(chosen.semiregular && chosen.is_cover);

    let report = classify(&star(4), &star_group(4), 2, &config()).unwrap();
    assert_eq!(report.case, Case::Degenerate);

    assert!(matches!(
        classify(&cycle(6), &aut(&cycle(6)), 1, &config()),
        Err(SymmetryError::STooSmall { s: 1 })
    ));
    assert!(matches!(
        classify(&path(4), &aut(&path(4)), 2, &config()),
        Err(SymmetryError::NotInFamily { .. })
    ));
    let report = classify(&complete(5), &symmetric(5), 2, &config()).unwrap();
    assert_eq!(report.case, Case::Basic);
}

#[test]
fn faithful_multipartite_is_basic() {
    // K_{3[2]} with the rotation x ↦ x + 1 mod 6 (parts {i, i+3}) and the
    // part-preserving reflection x ↦ −x: the group is D12 acting faithfully on
    // the three parts when no element fixes every part.
    let oct = octahedron();
    let parts_group = PermGroup::new(
        vec![
            perm(vec![2, 3, 4, 5, 0, 1]),
            perm(vec![0, 1, 4, 5, 2, 3]),
            perm(vec![1, 0, 3, 2, 5, 4]),
        ],
        6,
    )
    .unwrap();
    let fs = f_s_membership(&oct, &parts_group, 2).unwrap();
    if fs.member {
        let report = classify(&oct, &parts_group, 2, &config()).unwrap();
        let kernel = report.multipartite.as_ref().unwrap().kernel.order();
        assert_eq!(report.case == Case::Basic, kernel == 1);
    }
}

#[test]
fn reduction_examples() {
    let c12 = cycle(12);
    let chain = reduce_to_basic(&c12, &aut(&c12), 2, &config()).unwrap();
    assert_eq!(chain.steps.len(), 1);
    let step = &chain.steps[0];
    assert_eq!(step.normal.order(), 4);
    assert_eq!(type_key(&step.quotient), type_of(FamilyTag::Cycle { t: 3 }));
    assert_eq!(step.induced.order(), 6);
    assert!(chain.final_basic && step.is_cover && step.semiregular);

    let c20 = cycle(20);
    let plus = aut_plus(&c20);
    assert_eq!(plus.order(), 20);
    let chain = reduce_to_basic(&c20, &plus, 2, &config()).unwrap();
    assert_eq!(chain.steps[0].normal.order(), 5);
    assert_eq!(type_key(&chain.final_graph), type_of(FamilyTag::Cycle { t: 4 }));

    match reduce_to_basic(&complete(5), &symmetric(5), 2, &config()) {
        Err(SymmetryError::NotCaseC { case }) => assert_eq!(case, "b"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn basic_type_examples() {
    let t = basic_type(&kmn(3, 3), &sym_product(3, 3), 2, &config()).unwrap();
    assert_eq!(t.case, BasicCase::CompleteBipartite);
    let t = basic_type(&complete(5), &symmetric(5), 2, &config()).unwrap();
    assert_eq!(t.case, BasicCase::Quasiprimitive);
    let c10 = cycle(10);
    let t = basic_type(&c10, &aut_plus(&c10), 2, &config()).unwrap();
    assert_eq!(t.case, BasicCase::FaithfulBiparts);
    assert_eq!(t.orbits.len(), 2);
    assert!(t
        .orbits
        .iter()
        .all(|o| o.faithful && o.quasiprimitive && o.vertices.len() == 5));
    assert!(t.g_not_g_plus.agrees());
    assert!(matches!(
        basic_type(&c10, &aut(&c10), 2, &config()),
        Err(SymmetryError::NotBasic)
    ));
}

#[test]
fn s_arc_examples() {
    for t in 3..=9 {
        let c = cycle(t);
        let g = aut(&c);
        for s in 1..t {
            assert!(local_s_arc_transitivity(&c, &g, s).unwrap(), "C{t}, s={s}");
        }
    }
    assert!(local_s_arc_transitivity(&pet(), &petersen_s5(), 3).unwrap());
    assert!(local_s_arc_transitivity(&complete(4), &symmetric(4), 2).unwrap());
    assert!(!local_s_arc_transitivity(&cycle(6), &rotations(6), 1).unwrap());
    assert!(matches!(
        local_s_arc_transitivity(&complete(2), &symmetric(2), 2),
        Err(SymmetryError::NoSArc { s: 2 })
    ));
}

/// Pairs known to lie in F(s) for the given s.
fn fixtures() -> Vec<(&'static str, Graph, PermGroup, usize)> {
    let mut out = vec![
        ("Q3", q3(), aut(&q3()), 3),
        ("Petersen", pet(), petersen_s5(), 2),
        ("Heawood", hea(), aut(&hea()), 3),
        ("K5/S5", complete(5), symmetric(5), 2),
        ("K5/AGL", complete(5), agl15(), 1),
        ("K3,3", kmn(3, 3), sym_product(3, 3), 2),
        ("K3,3 swap", kmn(3, 3), sym_wreath_two(3), 2),
        ("K2,3", kmn(2, 3), sym_product(2, 3), 2),
        ("K3[2]", octahedron(), aut(&octahedron()), 2),
        ("K1,4", star(4), star_group(4), 2),
    ];
    for t in [6, 8, 9, 10, 12] {
        let c = cycle(t);
        out.push(("cycle", c.clone(), aut(&c), 2));
        if t % 2 == 0 {
            out.push(("cycle+", c.clone(), aut_plus(&c), 2));
        }
    }
    out
}

#[test]
fn fixtures_are_members_and_match_the_oracle() {
    for (name, g, group, s) in fixtures() {
        let v = f_s_membership(&g, &group, s).unwrap();
        assert!(v.member, "{name}");
        assert!(oracle_ldt(&g, &group, v.s_effective), "{name}");
    }
}

#[test]
fn edge_transitivity_follows_from_level_one() {
    for (name, g, group, _) in fixtures() {
        if !local_distance_transitivity(&g, &group, 1).unwrap().holds {
            continue;
        }
        let (u, v) = g.edges()[0];
        let mut orbit: BTreeSet<(usize, usize)> = BTreeSet::new();
        for e in closure(&group) {
            let (a, b) = (e.apply(u), e.apply(v));
            orbit.insert((a.min(b), a.max(b)));
        }
        assert_eq!(orbit.len(), g.edge_count(), "{name}");
    }
}

#[test]
fn g_plus_matches_point_stabiliser_generation() {
    for (name, g, group, _) in fixtures().into_iter().filter(|f| f.1.n() <= 20) {
        let gp = g_plus(&g, &group).unwrap();
        assert!(gp.group.same_group(&group.generated_by_point_stabilizers()), "{name}");
        assert!(gp.index <= 2, "{name}");
    }
}

#[test]
fn survey_invariants_hold_on_fixtures() {
    for (name, g, group, s) in fixtures() {
        let records = normal_quotient_survey(&g, &group, s, &config()).unwrap();
        for r in &records {
            // Closure: the quotient is in F(s) relative to the induced group.
            assert!(f_s_membership(&r.quotient, &r.induced, s).unwrap().member, "{name}");
            // Orbit systems of normal subgroups are G-invariant.
            assert!(group.action_on_partition(&r.orbits).is_ok(), "{name}");
            if r.orbits.len() > 1 && r.orbits.len() < g.n() {
                assert!(r.blocks_with_internal_edges.is_empty(), "{name}: block with an edge");
            }
            let multipartite = r
                .quotient_tags
                .iter()
                .any(|t| matches!(t, FamilyTag::CompleteMultipartite { m, .. } if *m >= 3));
            assert!(
                !(r.is_cover && multipartite),
                "{name}: cover of a multipartite quotient"
            );
        }
    }
}

#[test]
fn case_c_contract_holds() {
    for (name, g, group, s) in fixtures().into_iter().filter(|f| f.3 >= 2) {
        let report = classify(&g, &group, s, &config()).unwrap();
        if report.case == Case::CoverOfBasic {
            for r in report.survey.iter().filter(|r| !r.degenerate) {
                assert!(r.normal.is_semiregular(), "{name}");
                assert!(r.quotient.n() < g.n(), "{name}");
                assert!(r.is_cover, "{name}");
            }
        }
    }
}

#[test]
fn membership_passes_to_g_plus() {
    for (name, g, group, s) in fixtures() {
        let gp = g_plus(&g, &group).unwrap();
        assert!(f_s_membership(&g, &gp.group, s).unwrap().member, "{name}");
    }
}

#[test]
fn distance_and_arc_transitivity_agree_below_the_girth_bound() {
    for (name, g, group, _) in fixtures() {
        let Some(bound) = g.girth().arc_bound() else { continue };
        for s in 1..=bound.min(g.diameter()) {
            let ldt = local_distance_transitivity(&g, &group, s).unwrap().holds;
            let arc = local_s_arc_transitivity(&g, &group, s).unwrap();
            assert_eq!(ldt, arc, "{name} s={s}");
        }
    }
}

#[test]
fn distance_two_components_inherit_transitivity() {
    for (name, g, group, s) in fixtures() {
        if !g.is_bipartite() || s < 2 {
            continue;
        }
        let gp = g_plus(&g, &group).unwrap().group;
        for comp in g.distance_two_components().unwrap() {
            let restricted = gp.restrict_to(&comp.vertices).unwrap();
            let level = (s.min(g.diameter()) / 2).min(comp.graph.diameter());
            if level == 0 {
                continue;
            }
            let v = local_distance_transitivity(&comp.graph, &restricted, level).unwrap();
            assert!(v.holds, "{name}");
        }
    }
}

#[test]
fn g_not_g_plus_equivalence_on_basic_fixtures() {
    for (name, g, group, s) in fixtures() {
        if !is_g_basic(&g, &group, s, &config()).unwrap() {
            continue;
        }
        let t = basic_type(&g, &group, s, &config()).unwrap();
        assert!(t.g_not_g_plus.agrees(), "{name}");
        if matches!(
            t.case,
            BasicCase::BiquasiprimitiveBipartite | BasicCase::FaithfulBiparts
        ) {
            assert!(g.is_bipartite(), "{name}");
        }
    }
}

/// Subgroups of the full automorphism group generated by a subset of its
/// generators, used for random cross-validation.
fn sub_group(g: &Graph, mask: u32) -> PermGroup {
    let full = aut(g);
    let gens: Vec<Permutation> = full
        .generators()
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, p)| p.clone())
        .collect();
    PermGroup::new(gens, g.n()).unwrap()
}

fn small_graph() -> impl Strategy<Value = Graph> {
    prop_oneof![
        (3usize..10).prop_map(cycle),
        (1usize..4, 2usize..4).prop_map(|(m, n)| kmn(m.min(n), m.max(n))),
        (2usize..6).prop_map(complete),
        Just(q3()),
        Just(pet()),
        Just(octahedron()),
        (3usize..6).prop_map(path),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn orbit_count_agrees_with_full_transitivity(g in small_graph(), mask in any::<u32>()) {
        let group = sub_group(&g, mask);
        let ldt = local_distance_transitivity(&g, &group, g.diameter()).unwrap().holds;
        prop_assert_eq!(orbit_count_criterion(&g, &group).unwrap(), ldt);
    }

    #[test]
    fn ldt_matches_the_definition(g in small_graph(), mask in any::<u32>(), s in 1usize..4) {
        let group = sub_group(&g, mask);
        let ldt = local_distance_transitivity(&g, &group, s).unwrap().holds;
        prop_assert_eq!(ldt, oracle_ldt(&g, &group, s));
    }

    #[test]
    fn g_plus_index_at_most_two(g in small_graph(), mask in any::<u32>()) {
        let group = sub_group(&g, mask);
        if local_distance_transitivity(&g, &group, 1).unwrap().holds {
            let gp = g_plus(&g, &group).unwrap();
            prop_assert!(gp.index <= 2);
            prop_assert!(gp.group.same_group(&group.generated_by_point_stabilizers()));
        }
    }
}
