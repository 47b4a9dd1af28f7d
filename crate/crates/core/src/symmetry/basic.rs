//! Typing of basic graphs by quasiprimitivity and faithfulness, and local
//! s-arc transitivity.

use std::collections::HashMap;

use serde::Serialize;

use crate::graphcore::{recognize_family, FamilyTag, Graph};
use crate::permgroup::{qp_classification, PermGroup, QpKind};

use super::{g_plus, is_g_basic, orbit_representatives, validate_automorphisms, AnalysisConfig, SymmetryError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BasicCase {
    /// (i) `K_{m,n}` with `m, n ≥ 2`.
    #[serde(rename = "i")]
    CompleteBipartite,
    /// (ii) `G` quasiprimitive on the vertices.
    #[serde(rename = "ii")]
    Quasiprimitive,
    /// (iii) bipartite, `G` biquasiprimitive, `G⁺` faithful on each bipart.
    #[serde(rename = "iii")]
    BiquasiprimitiveBipartite,
    /// (iv) bipartite, `G = G⁺` faithful on both biparts and quasiprimitive
    /// on at least one.
    #[serde(rename = "iv")]
    FaithfulBiparts,
}

impl BasicCase {
    pub fn numeral(&self) -> &'static str {
        match self {
            BasicCase::CompleteBipartite => "i",
            BasicCase::Quasiprimitive => "ii",
            BasicCase::BiquasiprimitiveBipartite => "iii",
            BasicCase::FaithfulBiparts => "iv",
        }
    }
}

/// Per-orbit (or per-bipart) flags for the action of a group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitFlags {
    pub vertices: Vec<usize>,
    pub faithful: bool,
    pub quasiprimitive: bool,
}

/// Both sides of the equivalence "G-basic but not G⁺-basic" ⟺ "bipartite,
/// G biquasiprimitive, G⁺ faithful on both biparts and quasiprimitive on
/// neither".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GNotGPlus {
    pub basic_not_plus_basic: bool,
    pub structural_condition: bool,
}

impl GNotGPlus {
    pub fn agrees(&self) -> bool {
        self.basic_not_plus_basic == self.structural_condition
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BasicType {
    pub case: BasicCase,
    /// `qp_classification` of `G` on the whole vertex set, when transitive.
    pub group_kind: Option<QpKind>,
    /// Flags for `G⁺` on each bipart (bipartite graphs), or for `G` on its
    /// single orbit.
    pub orbits: Vec<OrbitFlags>,
    pub g_plus_index: u128,
    pub g_not_g_plus: GNotGPlus,
}

fn orbit_flags(group: &PermGroup, orbit: &[usize], config: &AnalysisConfig) -> Result<OrbitFlags, SymmetryError> {
    let faithful = group.kernel_on_subset(orbit)?.is_trivial();
    let restricted = group.restrict_to(orbit)?;
    let quasiprimitive = qp_classification(&restricted, &config.caps)?.kind == QpKind::Quasiprimitive;
    Ok(OrbitFlags {
        vertices: orbit.to_vec(),
        faithful,
        quasiprimitive,
    })
}

/// Assigns the basic pair `(Γ, G)` to one of the cases (i)–(iv).
pub fn basic_type(
    graph: &Graph,
    group: &PermGroup,
    s: usize,
    config: &AnalysisConfig,
) -> Result<BasicType, SymmetryError> {
    if !is_g_basic(graph, group, s, config)? {
        return Err(SymmetryError::NotBasic);
    }
    let plus = g_plus(graph, group)?;
    let transitive = group.is_transitive();
    let group_kind = if transitive {
        Some(qp_classification(group, &config.caps)?.kind)
    } else {
        None
    };
    let orbits: Vec<OrbitFlags> = match graph.biparts() {
        Some((a, b)) => vec![
            orbit_flags(&plus.group, &a, config)?,
            orbit_flags(&plus.group, &b, config)?,
        ],
        None => vec![orbit_flags(group, &(0..graph.n()).collect::<Vec<_>>(), config)?],
    };
    let bipartite = graph.is_bipartite();
    let complete_bipartite = recognize_family(graph)
        .iter()
        .any(|t| matches!(t, FamilyTag::CompleteBipartite { m, .. } if *m >= 2));
    let all_faithful = orbits.iter().all(|o| o.faithful);

    let case = if complete_bipartite {
        BasicCase::CompleteBipartite
    } else if group_kind == Some(QpKind::Quasiprimitive) {
        BasicCase::Quasiprimitive
    } else if bipartite && group_kind == Some(QpKind::Biquasiprimitive) && all_faithful {
        BasicCase::BiquasiprimitiveBipartite
    } else if bipartite && !transitive && all_faithful && orbits.iter().any(|o| o.quasiprimitive) {
        BasicCase::FaithfulBiparts
    } else {
        return Err(SymmetryError::InvariantViolation(
            "basic pair matches none of the cases (i)-(iv)".into(),
        ));
    };

    let plus_basic = if plus.index == 1 {
        true
    } else {
        is_g_basic(graph, &plus.group, s, config)?
    };
    let structural_condition = bipartite
        && group_kind == Some(QpKind::Biquasiprimitive)
        && all_faithful
        && orbits.iter().all(|o| !o.quasiprimitive);
    Ok(BasicType {
        case,
        group_kind,
        orbits,
        g_plus_index: plus.index,
        g_not_g_plus: GNotGPlus {
            basic_not_plus_basic: !plus_basic,
            structural_condition,
        },
    })
}

/// Walks `Γ` enumerating every s-arc `(v_0, .., v_s)` from `v`: consecutive
/// vertices adjacent, `v_{i-1} ≠ v_{i+1}`.
fn s_arcs_from(graph: &Graph, v: usize, s: usize) -> Vec<Vec<usize>> {
    let mut arcs = vec![vec![v]];
    for _ in 0..s {
        let mut next = Vec::new();
        for arc in &arcs {
            let last = arc[arc.len() - 1];
            let back = (arc.len() >= 2).then(|| arc[arc.len() - 2]);
            for &w in graph.neighbors(last) {
                if Some(w) != back {
                    let mut longer = arc.clone();
                    longer.push(w);
                    next.push(longer);
                }
            }
        }
        arcs = next;
    }
    arcs
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Whether `G_v` is transitive on the s-arcs starting at `v`, for one `v` in
/// each `G`-orbit. Vertices with no s-arcs impose no condition.
pub fn local_s_arc_transitivity(graph: &Graph, group: &PermGroup, s: usize) -> Result<bool, SymmetryError> {
    validate_automorphisms(graph, group)?;
    let mut any_arc = false;
    let mut transitive = true;
    for v in orbit_representatives(group) {
        let arcs = s_arcs_from(graph, v, s);
        if arcs.is_empty() {
            continue;
        }
        any_arc = true;
        let index: HashMap<&[usize], usize> = arcs.iter().enumerate().map(|(i, a)| (a.as_slice(), i)).collect();
        let mut parent: Vec<usize> = (0..arcs.len()).collect();
        let stabilizer = group.point_stabilizer(v)?;
        for g in stabilizer.generators() {
            for (i, arc) in arcs.iter().enumerate() {
                let image: Vec<usize> = arc.iter().map(|&x| g.apply(x)).collect();
                let j = index[image.as_slice()];
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
        let root = find(&mut parent, 0);
        if (1..arcs.len()).any(|i| find(&mut parent, i) != root) {
            transitive = false;
        }
    }
    if !any_arc {
        return Err(SymmetryError::NoSArc { s });
    }
    Ok(transitive)
}
