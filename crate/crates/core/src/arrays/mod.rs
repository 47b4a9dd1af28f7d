//! s-partial intersection arrays, s-distance regularity and biregularity,
//! the identities linking the two arrays of a biregular graph, and the
//! reconstruction of one array from the other.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graphcore::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrayError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("s = {s} exceeds the diameter {diameter}")]
    STooLarge { s: usize, diameter: usize },
    #[error("infeasible array: {0}")]
    InfeasibleArray(String),
    #[error("array syntax: {0}")]
    Syntax(String),
}

/// Which bipart an array belongs to: unprimed is the bipart holding vertex 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Unprimed,
    Primed,
}

/// `ι(Γ, s, x)` together with the `a_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalArray {
    pub base: usize,
    pub s: usize,
    /// `a_0..a_s`.
    pub a: Vec<u64>,
    /// `b_0..b_s`.
    pub b: Vec<u64>,
    /// `c_1..c_s`.
    pub c: Vec<u64>,
    pub side: Option<Side>,
}

impl LocalArray {
    pub fn tuple(&self) -> ArrayTuple {
        ArrayTuple {
            b: self.b.clone(),
            c: self.c.clone(),
        }
    }

    fn same_counts(&self, other: &LocalArray) -> bool {
        self.a == other.a && self.b == other.b && self.c == other.c
    }
}

/// The sequence form `(b_0, .., b_s; c_1, .., c_s)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ArrayTuple {
    pub b: Vec<u64>,
    pub c: Vec<u64>,
}

impl ArrayTuple {
    pub fn new(b: Vec<u64>, c: Vec<u64>) -> Result<Self, ArrayError> {
        if b.is_empty() || c.len() + 1 != b.len() {
            return Err(ArrayError::Syntax(format!(
                "expected s+1 values of b and s values of c, got {} and {}",
                b.len(),
                c.len()
            )));
        }
        Ok(ArrayTuple { b, c })
    }

    pub fn s(&self) -> usize {
        self.b.len() - 1
    }

    /// `c_i` for `1 ≤ i ≤ s`; `c_0` is taken as 0.
    pub fn c_at(&self, i: usize) -> u64 {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }
}

impl fmt::Display for ArrayTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({};{})", join(&self.b), join(&self.c))
    }
}

impl std::str::FromStr for ArrayTuple {
    type Err = ArrayError;

    /// Parses `(b0,..,bs;c1,..,cs)`; the parentheses are optional.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (b, c) = inner
            .split_once(';')
            .ok_or_else(|| ArrayError::Syntax("missing `;` between b and c".into()))?;
        let list = |t: &str| -> Result<Vec<u64>, ArrayError> {
            t.split(',')
                .map(str::trim)
                .filter(|x| !x.is_empty())
                .map(|x| {
                    x.parse::<u64>()
                        .map_err(|_| ArrayError::Syntax(format!("bad entry `{x}`")))
                })
                .collect()
        };
        ArrayTuple::new(list(b)?, list(c)?)
    }
}

/// Two vertices of the same layer whose counts disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IllDefinedWitness {
    pub layer: usize,
    pub y1: usize,
    pub y2: usize,
    /// `(a, b, c)` for `y1` and for `y2`.
    pub counts1: (u64, u64, u64),
    pub counts2: (u64, u64, u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LocalArrayOutcome {
    Defined(LocalArray),
    IllDefined(IllDefinedWitness),
}

/// The counts `a_i(x)`, `b_i(x)`, `c_i(x)` for `i ≤ s`. Layers beyond the
/// eccentricity of `x` are empty and contribute zeros.
pub fn local_intersection_array(graph: &Graph, s: usize, x: usize) -> Result<LocalArrayOutcome, ArrayError> {
    let diameter = graph.diameter();
    if s > diameter {
        return Err(ArrayError::STooLarge { s, diameter });
    }
    let partition = graph.distance_partition(x)?;
    let (mut a, mut b, mut c) = (vec![0u64; s + 1], vec![0u64; s + 1], vec![0u64; s]);
    for i in 0..=s.min(partition.eccentricity) {
        let mut first: Option<(usize, (u64, u64, u64))> = None;
        for &y in partition.layer(i) {
            let mut counts = (0u64, 0u64, 0u64);
            for &w in graph.neighbors(y) {
                let d = graph.distance(x, w);
                if d == i {
                    counts.0 += 1;
                } else if d == i + 1 {
                    counts.1 += 1;
                } else {
                    counts.2 += 1;
                }
            }
            match first {
                None => first = Some((y, counts)),
                Some((y1, c1)) if c1 != counts => {
                    return Ok(LocalArrayOutcome::IllDefined(IllDefinedWitness {
                        layer: i,
                        y1,
                        y2: y,
                        counts1: c1,
                        counts2: counts,
                    }))
                }
                Some(_) => {}
            }
        }
        let (_, (ai, bi, ci)) = first.expect("layers up to the eccentricity are nonempty");
        a[i] = ai;
        b[i] = bi;
        if i >= 1 {
            c[i - 1] = ci;
        }
    }
    let side = graph.biparts().map(|(first, _)| {
        if first.binary_search(&x).is_ok() {
            Side::Unprimed
        } else {
            Side::Primed
        }
    });
    Ok(LocalArrayOutcome::Defined(LocalArray {
        base: x,
        s,
        a,
        b,
        c,
        side,
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regularity {
    Regular,
    Biregular,
    Neither,
}

/// `ι` and, for biregular graphs, `ι'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionArrayPair {
    pub unprimed: LocalArray,
    pub primed: Option<LocalArray>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub verdict: Regularity,
    pub s: usize,
    pub arrays: Option<IntersectionArrayPair>,
    /// Two base vertices that should agree but do not.
    pub disagreement: Option<(usize, usize)>,
    /// A base vertex whose array is ill-defined, with the witness.
    pub ill_defined: Option<(usize, IllDefinedWitness)>,
}

/// s-distance regular: one array for all vertices. s-distance biregular:
/// bipartite with one array per bipart.
pub fn regularity_check(graph: &Graph, s: usize) -> Result<RegularityReport, ArrayError> {
    let mut arrays = Vec::with_capacity(graph.n());
    for x in 0..graph.n() {
        match local_intersection_array(graph, s, x)? {
            LocalArrayOutcome::Defined(arr) => arrays.push(arr),
            LocalArrayOutcome::IllDefined(w) => {
                return Ok(RegularityReport {
                    verdict: Regularity::Neither,
                    s,
                    arrays: None,
                    disagreement: None,
                    ill_defined: Some((x, w)),
                })
            }
        }
    }
    let neither = |pair: (usize, usize)| RegularityReport {
        verdict: Regularity::Neither,
        s,
        arrays: None,
        disagreement: Some(pair),
        ill_defined: None,
    };
    if let Some(y) = (1..arrays.len()).find(|&y| !arrays[y].same_counts(&arrays[0])) {
        let Some((first, second)) = graph.biparts() else {
            return Ok(neither((0, y)));
        };
        for part in [&first, &second] {
            if let Some(&y) = part.iter().find(|&&y| !arrays[y].same_counts(&arrays[part[0]])) {
                return Ok(neither((part[0], y)));
            }
        }
        return Ok(RegularityReport {
            verdict: Regularity::Biregular,
            s,
            arrays: Some(IntersectionArrayPair {
                unprimed: arrays[first[0]].clone(),
                primed: Some(arrays[second[0]].clone()),
            }),
            disagreement: None,
            ill_defined: None,
        });
    }
    Ok(RegularityReport {
        verdict: Regularity::Regular,
        s,
        arrays: Some(IntersectionArrayPair {
            unprimed: arrays[0].clone(),
            primed: None,
        }),
        disagreement: None,
        ill_defined: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Identity {
    /// `b_i + c_i = b_0` (even `i`) and `b'_j + c'_j = b_0` (odd `j`).
    #[serde(rename = "a")]
    A,
    /// `b_i + c_i = b'_0` (odd `i`) and `b'_j + c'_j = b'_0` (even `j`).
    #[serde(rename = "b")]
    B,
    /// `c_i c_{i+1} = c'_i c'_{i+1}` for even `i`, `1 < i < s`.
    #[serde(rename = "c")]
    C,
    /// `b_i b_{i+1} = b'_i b'_{i+1}` for odd `i < s`.
    #[serde(rename = "d")]
    D,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: Identity,
    pub index: usize,
    pub statement: String,
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
    /// The instance concerns an empty layer and is not a constraint.
    pub vacuous: bool,
}

impl IdentityCheck {
    pub fn passes(&self) -> bool {
        self.holds || self.vacuous
    }
}

/// Evaluates every instance of the four identities up to `s`.
///
/// For `i ≥ 1`, the layer `Γ_i(x)` is empty exactly when `c_i = 0`. An
/// instance of (a) or (b) on an empty layer says nothing about valencies and
/// is marked vacuous; this is what happens on the centre side of a star.
pub fn verify_biregular_identities(unprimed: &ArrayTuple, primed: &ArrayTuple, s: usize) -> Vec<IdentityCheck> {
    let s = s.min(unprimed.s()).min(primed.s());
    let (b, bp) = (&unprimed.b, &primed.b);
    let mut out = Vec::new();
    let mut valency = |identity: Identity, side: &ArrayTuple, prime: &str, i: usize, target: u64, tname: &str| {
        let lhs = side.b[i] + side.c_at(i);
        out.push(IdentityCheck {
            identity,
            index: i,
            statement: format!("b{prime}_{i}+c{prime}_{i}={tname}"),
            lhs,
            rhs: target,
            holds: lhs == target,
            vacuous: side.c_at(i) == 0,
        });
    };
    for i in 1..=s {
        if i % 2 == 0 {
            valency(Identity::A, unprimed, "", i, b[0], "b_0");
        } else {
            valency(Identity::A, primed, "'", i, b[0], "b_0");
        }
    }
    for i in 1..=s {
        if i % 2 == 1 {
            valency(Identity::B, unprimed, "", i, bp[0], "b'_0");
        } else {
            valency(Identity::B, primed, "'", i, bp[0], "b'_0");
        }
    }
    for i in (2..s).filter(|i| i % 2 == 0) {
        let lhs = unprimed.c_at(i) * unprimed.c_at(i + 1);
        let rhs = primed.c_at(i) * primed.c_at(i + 1);
        out.push(IdentityCheck {
            identity: Identity::C,
            index: i,
            statement: format!("c_{i}c_{}=c'_{i}c'_{}", i + 1, i + 1),
            lhs,
            rhs,
            holds: lhs == rhs,
            vacuous: false,
        });
    }
    for i in (1..s).filter(|i| i % 2 == 1) {
        let lhs = b[i] * b[i + 1];
        let rhs = bp[i] * bp[i + 1];
        out.push(IdentityCheck {
            identity: Identity::D,
            index: i,
            statement: format!("b_{i}b_{}=b'_{i}b'_{}", i + 1, i + 1),
            lhs,
            rhs,
            holds: lhs == rhs,
            vacuous: false,
        });
    }
    out
}

fn exact_div(num: i64, den: i64, what: &str) -> Result<i64, ArrayError> {
    if den == 0 {
        return Err(ArrayError::InfeasibleArray(format!(
            "division by zero computing {what}"
        )));
    }
    if num % den != 0 {
        return Err(ArrayError::InfeasibleArray(format!(
            "{num}/{den} is not an integer computing {what}"
        )));
    }
    Ok(num / den)
}

fn non_negative(v: i64, what: &str) -> Result<i64, ArrayError> {
    if v < 0 {
        return Err(ArrayError::InfeasibleArray(format!("{what} = {v} is negative")));
    }
    Ok(v)
}

/// Recovers the other array of an s-distance biregular graph.
///
/// Steps: `b'_0 = b_1 + c_1`, `c'_1 = 1`, `b'_1 = b_0 − c_1`; then while
/// `2i < s`: `b'_{2i} = b_{2i−1} b_{2i} / b'_{2i−1}`, `c'_{2i} = b'_0 − b'_{2i}`,
/// `c'_{2i+1} = c_{2i} c_{2i+1} / c'_{2i}`, `b'_{2i+1} = b_0 − c'_{2i+1}`. For
/// even `s`, `b'_s = b_{s−1} b_s / b'_{s−1}` and `c'_s = b'_0 − b'_s`, or both
/// zero when `b'_{s−1} = 0`.
///
/// The even-index constant is `b'_0` (the valency on the primed side) and the
/// odd `c'` step divides `c_{2i} c_{2i+1}`; those are the forms that follow
/// from the identities and reproduce the arrays of `K_{2,3}` and `C_6`. The
/// variants `c'_{2i} = b_0 − b'_{2i}` and `c'_{2i+1} = c_{2i} b_{2i+1} / c'_{2i}`
/// do not.
pub fn reconstruct_dual(iota: &ArrayTuple) -> Result<ArrayTuple, ArrayError> {
    let s = iota.s();
    if s == 0 {
        return Err(ArrayError::InfeasibleArray("s must be at least 1".into()));
    }
    if iota.c[0] != 1 {
        return Err(ArrayError::InfeasibleArray(format!(
            "c_1 = {} but must be 1",
            iota.c[0]
        )));
    }
    let b = |i: usize| iota.b[i] as i64;
    let c = |i: usize| iota.c_at(i) as i64;
    let mut bp = vec![0i64; s + 1];
    let mut cp = vec![0i64; s + 1];
    bp[0] = b(1) + c(1);
    cp[1] = 1;
    bp[1] = non_negative(b(0) - c(1), "b'_1")?;
    let mut i = 1;
    while 2 * i < s {
        bp[2 * i] = exact_div(b(2 * i - 1) * b(2 * i), bp[2 * i - 1], &format!("b'_{}", 2 * i))?;
        cp[2 * i] = non_negative(bp[0] - bp[2 * i], &format!("c'_{}", 2 * i))?;
        cp[2 * i + 1] = exact_div(c(2 * i) * c(2 * i + 1), cp[2 * i], &format!("c'_{}", 2 * i + 1))?;
        bp[2 * i + 1] = non_negative(b(0) - cp[2 * i + 1], &format!("b'_{}", 2 * i + 1))?;
        i += 1;
    }
    if s.is_multiple_of(2) && bp[s - 1] != 0 {
        bp[s] = exact_div(b(s - 1) * b(s), bp[s - 1], &format!("b'_{s}"))?;
        cp[s] = non_negative(bp[0] - bp[s], &format!("c'_{s}"))?;
    }
    Ok(ArrayTuple {
        b: bp.into_iter().map(|v| v as u64).collect(),
        c: cp[1..].iter().map(|&v| v as u64).collect(),
    })
}
