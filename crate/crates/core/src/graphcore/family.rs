//! Recognisers and constructors for the small families that are always
//! locally distance transitive: complete, complete bipartite, complete
//! multipartite graphs, cycles and stars.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::permgroup::BlockSystem;

use super::{Graph, GraphError};

/// Variant order is the reporting precedence, most specific first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyTag {
    K1,
    K2,
    /// `K_{1,r}` with `r ≥ 2`.
    Star {
        r: usize,
    },
    Cycle {
        t: usize,
    },
    Complete {
        n: usize,
    },
    /// `K_{m,n}` with `m ≤ n`.
    CompleteBipartite {
        m: usize,
        n: usize,
    },
    /// `K_{m[b]}`: `m ≥ 2` parts of size `b ≥ 2`.
    CompleteMultipartite {
        m: usize,
        b: usize,
    },
    Other,
}

impl FamilyTag {
    pub fn is_other(&self) -> bool {
        matches!(self, FamilyTag::Other)
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyTag::K1 => write!(f, "K1"),
            FamilyTag::K2 => write!(f, "K2"),
            FamilyTag::Star { r } => write!(f, "star{r}"),
            FamilyTag::Cycle { t } => write!(f, "C{t}"),
            FamilyTag::Complete { n } => write!(f, "K{n}"),
            FamilyTag::CompleteBipartite { m, n } => write!(f, "K{m},{n}"),
            FamilyTag::CompleteMultipartite { m, b } => write!(f, "K{m}[{b}]"),
            FamilyTag::Other => write!(f, "other"),
        }
    }
}

impl FromStr for FamilyTag {
    type Err = GraphError;

    /// Accepts `K1`, `K2`, `Kn`, `Km,n`, `Km[b]`, `Ct`, `starR` (or `Sr`) and
    /// `other`. `K1` and `K2` parse to their dedicated tags.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::BadParameters(format!("unrecognised family tag `{s}`"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let s = s.trim();
        if s.eq_ignore_ascii_case("other") {
            return Ok(FamilyTag::Other);
        }
        if let Some(rest) = s.strip_prefix("star").or_else(|| s.strip_prefix('S')) {
            return Ok(FamilyTag::Star { r: num(rest)? });
        }
        if let Some(rest) = s.strip_prefix('C') {
            return Ok(FamilyTag::Cycle { t: num(rest)? });
        }
        let rest = s.strip_prefix('K').ok_or_else(bad)?;
        if let Some((m, n)) = rest.split_once(',') {
            return Ok(FamilyTag::CompleteBipartite { m: num(m)?, n: num(n)? });
        }
        if let Some((m, b)) = rest.split_once('[') {
            let b = b.strip_suffix(']').ok_or_else(bad)?;
            return Ok(FamilyTag::CompleteMultipartite { m: num(m)?, b: num(b)? });
        }
        Ok(match num(rest)? {
            1 => FamilyTag::K1,
            2 => FamilyTag::K2,
            n => FamilyTag::Complete { n },
        })
    }
}

/// Every family the graph belongs to, sorted by precedence. A graph in none
/// of the families gets the single tag `Other`.
pub fn recognize_family(graph: &Graph) -> Vec<FamilyTag> {
    let n = graph.n();
    let m = graph.edge_count();
    let mut tags = Vec::new();
    if n == 1 {
        tags.push(FamilyTag::K1);
    }
    if n == 2 {
        tags.push(FamilyTag::K2);
    }
    if m == n * (n - 1) / 2 {
        tags.push(FamilyTag::Complete { n });
    }
    if n >= 3 && (0..n).all(|v| graph.degree(v) == 2) {
        tags.push(FamilyTag::Cycle { t: n });
    }
    if let Some((a, b)) = graph.biparts() {
        let (lo, hi) = (a.len().min(b.len()), a.len().max(b.len()));
        if lo * hi == m {
            tags.push(FamilyTag::CompleteBipartite { m: lo, n: hi });
            if lo == 1 && hi >= 2 {
                tags.push(FamilyTag::Star { r: hi });
            }
        }
    }
    if let Some((parts, b)) = multipartite_shape(graph) {
        tags.push(FamilyTag::CompleteMultipartite { m: parts, b });
    }
    if tags.is_empty() {
        tags.push(FamilyTag::Other);
    }
    tags.sort();
    tags
}

/// `(m, b)` if non-adjacency is an equivalence relation with `m ≥ 2` classes
/// all of size `b ≥ 2`.
fn multipartite_shape(graph: &Graph) -> Option<(usize, usize)> {
    let parts = multipartite_parts(graph)?;
    Some((parts.len(), parts.blocks()[0].len()))
}

/// The parts of a complete multipartite graph `K_{m[b]}` (`m ≥ 2`, `b ≥ 2`):
/// the classes of the relation "equal or non-adjacent".
pub fn multipartite_parts(graph: &Graph) -> Option<BlockSystem> {
    let n = graph.n();
    let mut classes: HashMap<Vec<usize>, usize> = HashMap::new();
    for v in 0..n {
        let class: Vec<usize> = (0..n).filter(|&w| w == v || !graph.is_adjacent(v, w)).collect();
        *classes.entry(class).or_default() += 1;
    }
    let b = classes.keys().next()?.len();
    let consistent = classes.iter().all(|(c, &count)| c.len() == b && count == b);
    if !consistent || b < 2 || n / b < 2 {
        return None;
    }
    BlockSystem::new(classes.into_keys().collect(), n).ok()
}

/// The canonical labelled member of a family. Complete bipartite graphs put
/// the smaller side first (so a star has centre 0); multipartite graphs use
/// contiguous parts.
pub fn make_family(tag: FamilyTag) -> Result<Graph, GraphError> {
    let bad = |msg: String| Err(GraphError::BadParameters(msg));
    let mut edges = Vec::new();
    let n = match tag {
        FamilyTag::K1 => 1,
        FamilyTag::K2 => {
            edges.push((0, 1));
            2
        }
        FamilyTag::Star { r } => {
            if r < 2 {
                return bad(format!("a star needs at least two leaves, got {r}"));
            }
            edges.extend((1..=r).map(|v| (0, v)));
            r + 1
        }
        FamilyTag::Cycle { t } => {
            if t < 3 {
                return bad(format!("a cycle needs at least three vertices, got {t}"));
            }
            edges.extend((0..t).map(|v| (v, (v + 1) % t)));
            t
        }
        FamilyTag::Complete { n } => {
            if n == 0 {
                return bad("a complete graph needs at least one vertex".into());
            }
            for u in 0..n {
                edges.extend((u + 1..n).map(|v| (u, v)));
            }
            n
        }
        FamilyTag::CompleteBipartite { m, n } => {
            if m == 0 || m > n {
                return bad(format!("K{m},{n} needs 1 ≤ m ≤ n"));
            }
            for u in 0..m {
                edges.extend((m..m + n).map(|v| (u, v)));
            }
            m + n
        }
        FamilyTag::CompleteMultipartite { m, b } => {
            if m < 2 || b < 2 {
                return bad(format!("K{m}[{b}] needs m ≥ 2 and b ≥ 2"));
            }
            let n = m * b;
            for u in 0..n {
                edges.extend((u + 1..n).filter(|v| v / b != u / b).map(|v| (u, v)));
            }
            n
        }
        FamilyTag::Other => return bad("`other` is not a constructible family".into()),
    };
    Graph::new(n, &edges)
}

/// The `d`-dimensional cube on `0..2^d`, vertices adjacent when they differ
/// in one bit.
pub fn hypercube(d: u32) -> Result<Graph, GraphError> {
    if d == 0 || d > 10 {
        return Err(GraphError::BadParameters(format!("cube dimension {d} outside 1..=10")));
    }
    let n = 1usize << d;
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..d).map(move |k| (u, u ^ (1 << k))))
        .filter(|&(u, v)| u < v)
        .collect();
    Graph::new(n, &edges)
}

/// The 2-subsets of `{0..4}` in lexicographic order, as labelled by
/// [`petersen`].
pub fn petersen_labels() -> Vec<[usize; 2]> {
    let mut labels = Vec::with_capacity(10);
    for a in 0..5 {
        for b in a + 1..5 {
            labels.push([a, b]);
        }
    }
    labels
}

/// The Petersen graph as the Kneser graph on 2-subsets of a 5-set: disjoint
/// pairs are adjacent.
pub fn petersen() -> Graph {
    let labels = petersen_labels();
    let mut edges = Vec::new();
    for (i, x) in labels.iter().enumerate() {
        for (j, y) in labels.iter().enumerate().skip(i + 1) {
            if x.iter().all(|p| !y.contains(p)) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(10, &edges).expect("the Petersen graph is connected")
}

/// The Heawood graph, the incidence graph of the Fano plane: a 14-cycle with
/// chords `i ~ i + 5` from each even `i`.
pub fn heawood() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    edges.extend((0..14).step_by(2).map(|i| (i, (i + 5) % 14)));
    Graph::new(14, &edges).expect("the Heawood graph is connected")
}
