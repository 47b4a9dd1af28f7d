//! Local distance transitivity and the normal-quotient analysis built on it:
//! membership in the families `F(s)`, the subgroup `G⁺`, degeneracy, the
//! survey of normal quotients, the reduction classifier and the typing of
//! basic graphs.

mod basic;
mod survey;

use serde::Serialize;
use thiserror::Error;

use crate::graphcore::{FamilyTag, Graph, GraphError};
use crate::permgroup::{BlockSystem, Caps, PermError, PermGroup};

pub use basic::{basic_type, local_s_arc_transitivity, BasicCase, BasicType, GNotGPlus, OrbitFlags};
pub use survey::{
    classify, is_g_basic, normal_quotient_survey, reduce_to_basic, Case, ClassificationReport, MultipartiteEvidence,
    QuotientRecord, ReductionChain, ReductionStep,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymmetryError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("group acts on {group} points but the graph has {graph} vertices")]
    DegreeMismatch { graph: usize, group: usize },
    #[error("generator {generator} is not an automorphism: it maps edge {{{}, {}}} to a non-edge", .edge.0, .edge.1)]
    NotAutomorphisms { generator: usize, edge: (usize, usize) },
    #[error("s must be at least 1")]
    SZero,
    #[error("s = {s} is too small; the classification needs s ≥ 2")]
    STooSmall { s: usize },
    #[error("graph is not in F({s}) relative to the group: {reason}")]
    NotInFamily { s: usize, reason: String },
    #[error("the pair falls under case ({case}), not case (c)")]
    NotCaseC { case: String },
    #[error("graph is not basic relative to the group")]
    NotBasic,
    #[error("graph has no {s}-arcs")]
    NoSArc { s: usize },
    #[error("internal consistency check failed: {0}")]
    InvariantViolation(String),
}

impl SymmetryError {
    /// True when the error comes from an enumeration cap.
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, SymmetryError::Perm(PermError::CapExceeded { .. }))
    }
}

/// Limits and scheduling for the heavier analyses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisConfig {
    pub caps: Caps,
    /// Evaluate survey records on the rayon pool.
    pub parallel: bool,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            caps: Caps::default(),
            parallel: true,
        }
    }
}

/// Two vertices of `Γ_i(v)` in different `G_v`-orbits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LayerWitness {
    pub vertex: usize,
    pub layer: usize,
    pub y1: usize,
    pub y2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LdtVerdict {
    pub holds: bool,
    /// `s` exceeds the diameter; no layer witness applies.
    pub exceeds_diameter: bool,
    pub witness: Option<LayerWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FsVerdict {
    pub member: bool,
    pub s_requested: usize,
    pub s_effective: usize,
    pub failure_witness: Option<LayerWitness>,
}

/// Checks that the group acts on the vertex set and preserves adjacency.
pub fn validate_automorphisms(graph: &Graph, group: &PermGroup) -> Result<(), SymmetryError> {
    if group.degree() != graph.n() {
        return Err(SymmetryError::DegreeMismatch {
            graph: graph.n(),
            group: group.degree(),
        });
    }
    for (gi, g) in group.generators().iter().enumerate() {
        for (u, v) in graph.edges() {
            if !graph.is_adjacent(g.apply(u), g.apply(v)) {
                return Err(SymmetryError::NotAutomorphisms {
                    generator: gi,
                    edge: (u, v),
                });
            }
        }
    }
    Ok(())
}

fn orbit_representatives(group: &PermGroup) -> Vec<usize> {
    group.orbits().blocks().iter().map(|b| b[0]).collect()
}

/// Whether `G_v` is transitive on `Γ_i(v)` for all `1 ≤ i ≤ s`, checked on
/// one vertex per `G`-orbit. Layers beyond a vertex's eccentricity are empty
/// and count as transitive.
pub fn local_distance_transitivity(graph: &Graph, group: &PermGroup, s: usize) -> Result<LdtVerdict, SymmetryError> {
    validate_automorphisms(graph, group)?;
    if s > graph.diameter() {
        return Ok(LdtVerdict {
            holds: false,
            exceeds_diameter: true,
            witness: None,
        });
    }
    let witness = layer_failure(graph, group, s)?;
    Ok(LdtVerdict {
        holds: witness.is_none(),
        exceeds_diameter: false,
        witness,
    })
}

fn layer_failure(graph: &Graph, group: &PermGroup, s: usize) -> Result<Option<LayerWitness>, SymmetryError> {
    for v in orbit_representatives(group) {
        let partition = graph.distance_partition(v)?;
        let stab_orbits = group.point_stabilizer(v)?.orbits();
        for i in 1..=s.min(partition.eccentricity) {
            let layer = partition.layer(i);
            let first = layer[0];
            let home = stab_orbits.block_of(first);
            if let Some(&other) = layer.iter().find(|&&y| stab_orbits.block_of(y) != home) {
                return Ok(Some(LayerWitness {
                    vertex: v,
                    layer: i,
                    y1: first,
                    y2: other,
                }));
            }
        }
    }
    Ok(None)
}

/// Membership of `Γ` in `F(s)` relative to `G`: local `(G, s')`-distance
/// transitivity with `s' = min(s, diam Γ)`.
pub fn f_s_membership(graph: &Graph, group: &PermGroup, s: usize) -> Result<FsVerdict, SymmetryError> {
    if s == 0 {
        return Err(SymmetryError::SZero);
    }
    validate_automorphisms(graph, group)?;
    let s_effective = s.min(graph.diameter());
    let witness = layer_failure(graph, group, s_effective)?;
    Ok(FsVerdict {
        member: witness.is_none(),
        s_requested: s,
        s_effective,
        failure_witness: witness,
    })
}

/// `G_v` has exactly `ε(v) + 1` orbits for every vertex `v`.
pub fn orbit_count_criterion(graph: &Graph, group: &PermGroup) -> Result<bool, SymmetryError> {
    validate_automorphisms(graph, group)?;
    for v in orbit_representatives(group) {
        let orbits = group.point_stabilizer(v)?.orbits().len();
        if orbits != graph.eccentricity(v) + 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug)]
pub struct GPlus {
    pub group: PermGroup,
    /// The index `|G : G⁺|`.
    pub index: u128,
    pub orbit_count: usize,
}

/// `G⁺ = ⟨G_v | v ∈ VΓ⟩`, computed as the stabiliser of both biparts when the
/// graph is bipartite and as `G` itself otherwise.
pub fn g_plus(graph: &Graph, group: &PermGroup) -> Result<GPlus, SymmetryError> {
    validate_automorphisms(graph, group)?;
    let plus = match graph.biparts() {
        None => group.clone(),
        Some((a, b)) => {
            let parts = BlockSystem::new(vec![a, b], graph.n())?;
            group.action_on_partition(&parts)?.1
        }
    };
    Ok(GPlus {
        index: group.order() / plus.order(),
        orbit_count: plus.orbits().len(),
        group: plus,
    })
}

/// `K1`, `K2` and stars `K_{1,r}` (`r ≥ 2`).
pub fn is_degenerate(graph: &Graph) -> bool {
    tags_degenerate(&crate::graphcore::recognize_family(graph))
}

pub(crate) fn tags_degenerate(tags: &[FamilyTag]) -> bool {
    tags.iter()
        .any(|t| matches!(t, FamilyTag::K1 | FamilyTag::K2 | FamilyTag::Star { .. }))
}
