//! Normal quotients, the four-way reduction classification and the one-step
//! reduction to a basic quotient.

use rayon::prelude::*;
use serde::Serialize;

use crate::graphcore::{multipartite_parts, recognize_family, FamilyTag, Graph};
use crate::permgroup::{all_normal_subgroups, BlockSystem, NormalSubgroup, PermGroup};

use super::{f_s_membership, is_degenerate, tags_degenerate, AnalysisConfig, SymmetryError};

/// One nontrivial normal subgroup `N` and the quotient `Γ_N`.
#[derive(Clone, Debug)]
pub struct QuotientRecord {
    pub normal: PermGroup,
    pub normal_order: u128,
    pub orbits: BlockSystem,
    pub quotient: Graph,
    pub quotient_tags: Vec<FamilyTag>,
    /// Blocks of the orbit system containing an edge of `Γ`.
    pub blocks_with_internal_edges: Vec<usize>,
    /// `G/K` acting on the blocks, `K` the kernel of that action.
    pub induced: PermGroup,
    pub kernel: PermGroup,
    pub is_cover: bool,
    pub degenerate: bool,
    pub semiregular: bool,
    /// The quotient lies in `F(s)` relative to `induced`.
    pub in_family: bool,
}

impl QuotientRecord {
    fn sort_key(&self) -> (u128, &BlockSystem) {
        (self.normal_order, &self.orbits)
    }
}

fn check_member(graph: &Graph, group: &PermGroup, s: usize) -> Result<(), SymmetryError> {
    let verdict = f_s_membership(graph, group, s)?;
    if verdict.member {
        return Ok(());
    }
    let reason = match verdict.failure_witness {
        Some(w) => format!(
            "the stabiliser of {} is not transitive on layer {} ({} and {} lie in different orbits)",
            w.vertex, w.layer, w.y1, w.y2
        ),
        None => "local distance transitivity fails".into(),
    };
    Err(SymmetryError::NotInFamily { s, reason })
}

fn record_for(graph: &Graph, group: &PermGroup, n: &NormalSubgroup, s: usize) -> Result<QuotientRecord, SymmetryError> {
    let orbits = n.group.orbits();
    let (induced, kernel) = group.action_on_partition(&orbits)?;
    let quotient = graph.quotient(&orbits)?;
    let is_cover = graph.is_cover(&orbits)?;
    let tags = recognize_family(&quotient.graph);
    let in_family = f_s_membership(&quotient.graph, &induced, s)?.member;
    Ok(QuotientRecord {
        normal: n.group.clone(),
        normal_order: n.order,
        degenerate: tags_degenerate(&tags),
        semiregular: n.group.is_semiregular(),
        quotient_tags: tags,
        blocks_with_internal_edges: quotient.blocks_with_internal_edges,
        quotient: quotient.graph,
        orbits,
        induced,
        kernel,
        is_cover,
        in_family,
    })
}

/// One record per nontrivial normal subgroup of `G`, ordered by `|N|` and
/// then by orbit partition. Every quotient is re-checked for membership in
/// `F(s)` relative to its induced group; a failure is reported as an
/// invariant violation.
pub fn normal_quotient_survey(
    graph: &Graph,
    group: &PermGroup,
    s: usize,
    config: &AnalysisConfig,
) -> Result<Vec<QuotientRecord>, SymmetryError> {
    check_member(graph, group, s)?;
    let lattice = all_normal_subgroups(group, &config.caps)?;
    let normals: Vec<&NormalSubgroup> = lattice.nontrivial().collect();
    let mut records: Vec<QuotientRecord> = if config.parallel {
        normals
            .par_iter()
            .map(|n| record_for(graph, group, n, s))
            .collect::<Result<_, _>>()?
    } else {
        normals
            .iter()
            .map(|n| record_for(graph, group, n, s))
            .collect::<Result<_, _>>()?
    };
    records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    if let Some(bad) = records.iter().find(|r| !r.in_family) {
        return Err(SymmetryError::InvariantViolation(format!(
            "normal quotient by a subgroup of order {} is not in F({s}) relative to its induced group",
            bad.normal_order
        )));
    }
    Ok(records)
}

/// Nondegenerate, and every nontrivial normal quotient is degenerate.
pub fn is_g_basic(graph: &Graph, group: &PermGroup, s: usize, config: &AnalysisConfig) -> Result<bool, SymmetryError> {
    if is_degenerate(graph) {
        check_member(graph, group, s)?;
        return Ok(false);
    }
    let records = normal_quotient_survey(graph, group, s, config)?;
    Ok(records.iter().all(|r| r.degenerate))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Case {
    /// (a) the graph is degenerate.
    #[serde(rename = "a")]
    Degenerate,
    /// (b) the graph is `G`-basic.
    #[serde(rename = "b")]
    Basic,
    /// (c) a nondegenerate, non-basic graph covering its nondegenerate
    /// normal quotients.
    #[serde(rename = "c")]
    CoverOfBasic,
    /// (d) `K_{m[b]}` with `G` unfaithful on the parts.
    #[serde(rename = "d")]
    MultipartiteException,
}

impl Case {
    pub fn letter(&self) -> &'static str {
        match self {
            Case::Degenerate => "a",
            Case::Basic => "b",
            Case::CoverOfBasic => "c",
            Case::MultipartiteException => "d",
        }
    }

    pub fn description(&self) -> &'static str {
        match self {
            Case::Degenerate => "degenerate (K1, K2 or a star)",
            Case::Basic => "G-basic: every nontrivial normal quotient is degenerate",
            Case::CoverOfBasic => "cover of its nondegenerate normal quotients, with semiregular N",
            Case::MultipartiteException => "complete multipartite exception: G is not faithful on the parts",
        }
    }
}

/// The part system of a `K_{m[b]}` (`m ≥ 3`) and the kernel of `G` on it.
#[derive(Clone, Debug)]
pub struct MultipartiteEvidence {
    pub parts: BlockSystem,
    pub kernel: PermGroup,
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub case: Case,
    pub s: usize,
    /// Survey records consulted; empty for degenerate graphs.
    pub survey: Vec<QuotientRecord>,
    /// Case (c): index into `survey` of the maximal nondegenerate quotient.
    pub chosen: Option<usize>,
    pub multipartite: Option<MultipartiteEvidence>,
}

impl ClassificationReport {
    pub fn chosen_record(&self) -> Option<&QuotientRecord> {
        self.chosen.map(|i| &self.survey[i])
    }
}

/// Largest `|N|` with a nondegenerate quotient; ties go to the
/// lexicographically least orbit partition.
fn choose_maximal(records: &[QuotientRecord]) -> Option<usize> {
    records
        .iter()
        .enumerate()
        .filter(|(_, r)| !r.degenerate)
        .min_by(|(_, a), (_, b)| {
            b.normal_order
                .cmp(&a.normal_order)
                .then_with(|| a.orbits.cmp(&b.orbits))
        })
        .map(|(i, _)| i)
}

/// Sorts `(Γ, G)` into exactly one of the cases (a)–(d).
pub fn classify(
    graph: &Graph,
    group: &PermGroup,
    s: usize,
    config: &AnalysisConfig,
) -> Result<ClassificationReport, SymmetryError> {
    if s < 2 {
        return Err(SymmetryError::STooSmall { s });
    }
    check_member(graph, group, s)?;
    let mut report = ClassificationReport {
        case: Case::Degenerate,
        s,
        survey: Vec::new(),
        chosen: None,
        multipartite: None,
    };
    if is_degenerate(graph) {
        return Ok(report);
    }
    report.survey = normal_quotient_survey(graph, group, s, config)?;

    if let Some(parts) = multipartite_parts(graph).filter(|p| p.len() >= 3) {
        let (_, kernel) = group.action_on_partition(&parts)?;
        report.case = if kernel.is_trivial() {
            Case::Basic
        } else {
            Case::MultipartiteException
        };
        report.multipartite = Some(MultipartiteEvidence { parts, kernel });
        return Ok(report);
    }

    report.chosen = choose_maximal(&report.survey);
    if report.chosen.is_none() {
        report.case = Case::Basic;
        return Ok(report);
    }
    report.case = Case::CoverOfBasic;
    for r in report.survey.iter().filter(|r| !r.degenerate) {
        let problem = if !r.in_family {
            Some("quotient not in F(s)")
        } else if r.quotient.n() >= graph.n() {
            Some("quotient is not smaller than the graph")
        } else if !r.is_cover {
            Some("graph does not cover the quotient")
        } else if !r.semiregular {
            Some("normal subgroup is not semiregular")
        } else {
            None
        };
        if let Some(p) = problem {
            return Err(SymmetryError::InvariantViolation(format!(
                "case (c) contract broken for a normal subgroup of order {}: {p}",
                r.normal_order
            )));
        }
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct ReductionStep {
    pub normal: PermGroup,
    pub orbits: BlockSystem,
    pub quotient: Graph,
    pub quotient_tags: Vec<FamilyTag>,
    pub induced: PermGroup,
    pub is_cover: bool,
    pub semiregular: bool,
}

/// The reduction of a case-(c) pair to a basic normal quotient.
#[derive(Clone, Debug)]
pub struct ReductionChain {
    pub steps: Vec<ReductionStep>,
    pub final_graph: Graph,
    pub final_group: PermGroup,
    pub final_basic: bool,
    /// The full survey of the original pair, for exploring other choices.
    pub survey: Vec<QuotientRecord>,
}

/// Quotients by a maximal normal subgroup with a nondegenerate quotient.
/// Maximality makes one step enough: further quotients of `Γ_N` are
/// quotients `Γ_M` with `N < M`, all degenerate.
pub fn reduce_to_basic(
    graph: &Graph,
    group: &PermGroup,
    s: usize,
    config: &AnalysisConfig,
) -> Result<ReductionChain, SymmetryError> {
    let report = classify(graph, group, s, config)?;
    let Some(record) = report.chosen_record() else {
        return Err(SymmetryError::NotCaseC {
            case: report.case.letter().into(),
        });
    };
    if report.case != Case::CoverOfBasic {
        return Err(SymmetryError::NotCaseC {
            case: report.case.letter().into(),
        });
    }
    let step = ReductionStep {
        normal: record.normal.clone(),
        orbits: record.orbits.clone(),
        quotient: record.quotient.clone(),
        quotient_tags: record.quotient_tags.clone(),
        induced: record.induced.clone(),
        is_cover: record.is_cover,
        semiregular: record.semiregular,
    };
    let final_basic = is_g_basic(&step.quotient, &step.induced, s, config)?;
    if !final_basic || !step.is_cover {
        return Err(SymmetryError::InvariantViolation(
            "the maximal nondegenerate quotient is not basic or not covered".into(),
        ));
    }
    Ok(ReductionChain {
        final_graph: step.quotient.clone(),
        final_group: step.induced.clone(),
        final_basic,
        steps: vec![step],
        survey: report.survey,
    })
}
