//! Simple connected graphs: distance layers, biparts, girth, quotients and
//! covers, plus family recognisers and an automorphism search.

mod automorphism;
mod family;
mod io;

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::permgroup::BlockSystem;

pub use automorphism::{automorphism_group, DEFAULT_AUT_BOUND};
pub use family::{
    heawood, hypercube, make_family, multipartite_parts, petersen, petersen_labels, recognize_family, FamilyTag,
};
pub use io::{parse_graph, write_graph_json, write_graph_text};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} is out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {vertex}")]
    LoopEdge { vertex: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("graph is disconnected: vertex {unreachable} is not reachable from the component {component:?}")]
    Disconnected { component: Vec<usize>, unreachable: usize },
    #[error("block must contain at least two vertices")]
    SingletonBlock,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("bad family parameters: {0}")]
    BadParameters(String),
    #[error("graph has {n} vertices, above the automorphism-search bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("partition covers {found} points but the graph has {expected} vertices")]
    PartitionMismatch { expected: usize, found: usize },
    #[error("graph file line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

/// A finite, simple, connected, undirected graph on `0..n`.
#[derive(Clone)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
    distances: OnceLock<Vec<u32>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

/// Validates and builds a graph.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    Graph::new(n, edges)
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge { vertex: u });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge {
                    u: u.min(w[0]),
                    v: u.max(w[0]),
                });
            }
        }
        let graph = Graph {
            adjacency,
            edge_count: edges.len(),
            distances: OnceLock::new(),
        };
        let reach = graph.bfs_order(0);
        if reach.len() < n {
            let mut component = reach;
            component.sort_unstable();
            let mut seen = vec![false; n];
            for &c in &component {
                seen[c] = true;
            }
            let unreachable = seen.iter().position(|&s| !s).unwrap();
            return Err(GraphError::Disconnected { component, unreachable });
        }
        Ok(graph)
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, list) in self.adjacency.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn bfs_order(&self, source: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n()];
        let mut order = vec![source];
        seen[source] = true;
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for &y in &self.adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    order.push(y);
                }
            }
        }
        order
    }

    fn bfs_distances(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adjacency[x] {
                if dist[y] == u32::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    fn distance_table(&self) -> &[u32] {
        self.distances.get_or_init(|| {
            let n = self.n();
            let mut table = Vec::with_capacity(n * n);
            for v in 0..n {
                table.extend(self.bfs_distances(v));
            }
            table
        })
    }

    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.distance_table()[u * self.n() + v] as usize
    }

    pub fn distance_partition(&self, v: usize) -> Result<DistancePartition, GraphError> {
        if v >= self.n() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() });
        }
        let row = &self.distance_table()[v * self.n()..(v + 1) * self.n()];
        let eccentricity = *row.iter().max().unwrap() as usize;
        let mut layers = vec![Vec::new(); eccentricity + 1];
        for (w, &d) in row.iter().enumerate() {
            layers[d as usize].push(w);
        }
        Ok(DistancePartition {
            source: v,
            layers,
            eccentricity,
        })
    }

    pub fn eccentricity(&self, v: usize) -> usize {
        let n = self.n();
        *self.distance_table()[v * n..(v + 1) * n].iter().max().unwrap() as usize
    }

    pub fn diameter(&self) -> usize {
        (0..self.n()).map(|v| self.eccentricity(v)).max().unwrap_or(0)
    }

    /// The two parity classes of a bipartite graph on at least two vertices.
    /// The first class contains vertex 0.
    pub fn biparts(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        if self.n() < 2 {
            return None;
        }
        let n = self.n();
        let row = &self.distance_table()[..n];
        for (u, v) in self.edges() {
            if row[u] % 2 == row[v] % 2 {
                return None;
            }
        }
        let (even, odd): (Vec<usize>, Vec<usize>) = (0..n).partition(|&w| row[w].is_multiple_of(2));
        Some((even, odd))
    }

    pub fn is_bipartite(&self) -> bool {
        self.biparts().is_some()
    }

    pub fn girth(&self) -> Girth {
        let mut best: Option<usize> = None;
        for root in 0..self.n() {
            let dist = self.bfs_distances(root);
            let mut parent = vec![usize::MAX; self.n()];
            for &x in &self.bfs_order(root) {
                for &y in &self.adjacency[x] {
                    if dist[y] == dist[x] + 1 && parent[y] == usize::MAX {
                        parent[y] = x;
                    }
                }
            }
            for (u, v) in self.edges() {
                if parent[u] == v || parent[v] == u {
                    continue;
                }
                let len = dist[u] as usize + dist[v] as usize + 1;
                best = Some(best.map_or(len, |b| b.min(len)));
            }
        }
        best.map_or(Girth::Acyclic, Girth::Finite)
    }

    /// Quotient over a partition of the vertex set. Blocks containing an edge
    /// are reported instead of producing loops.
    pub fn quotient(&self, partition: &BlockSystem) -> Result<QuotientGraph, GraphError> {
        if partition.degree() != self.n() {
            return Err(GraphError::PartitionMismatch {
                expected: self.n(),
                found: partition.degree(),
            });
        }
        let k = partition.len();
        let mut edges = Vec::new();
        let mut internal = vec![false; k];
        let mut seen = std::collections::HashSet::new();
        for (u, v) in self.edges() {
            let (a, b) = (partition.block_of(u), partition.block_of(v));
            if a == b {
                internal[a] = true;
            } else if seen.insert((a.min(b), a.max(b))) {
                edges.push((a.min(b), a.max(b)));
            }
        }
        edges.sort_unstable();
        let graph = Graph::new(k, &edges)?;
        Ok(QuotientGraph {
            graph,
            blocks_with_internal_edges: (0..k).filter(|&b| internal[b]).collect(),
        })
    }

    /// True iff every vertex has exactly one neighbour in each block adjacent
    /// to its own, and no block contains an edge.
    pub fn is_cover(&self, partition: &BlockSystem) -> Result<bool, GraphError> {
        let quotient = self.quotient(partition)?;
        if quotient.block_has_internal_edge() {
            return Ok(false);
        }
        let mut counts = vec![0usize; partition.len()];
        for v in 0..self.n() {
            for &w in &self.adjacency[v] {
                counts[partition.block_of(w)] += 1;
            }
            let home = partition.block_of(v);
            for &b in quotient.graph.neighbors(home) {
                if counts[b] != 1 {
                    return Ok(false);
                }
            }
            for &w in &self.adjacency[v] {
                counts[partition.block_of(w)] = 0;
            }
        }
        Ok(true)
    }

    /// Least distance between two distinct vertices of `block`.
    pub fn block_min_distance(&self, block: &[usize]) -> Result<usize, GraphError> {
        if block.len() < 2 {
            return Err(GraphError::SingletonBlock);
        }
        for &v in block {
            if v >= self.n() {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() });
            }
        }
        let mut best = usize::MAX;
        for (i, &u) in block.iter().enumerate() {
            for &v in &block[i + 1..] {
                if u != v {
                    best = best.min(self.distance(u, v));
                }
            }
        }
        Ok(best)
    }

    /// The two components of the distance-2 graph of a bipartite graph, in
    /// bipart order.
    pub fn distance_two_components(&self) -> Result<[InducedComponent; 2], GraphError> {
        let (first, second) = self.biparts().ok_or(GraphError::NotBipartite)?;
        let build = |part: Vec<usize>| -> Result<InducedComponent, GraphError> {
            let mut edges = Vec::new();
            for (i, &u) in part.iter().enumerate() {
                for (j, &v) in part.iter().enumerate().skip(i + 1) {
                    if self.distance(u, v) == 2 {
                        edges.push((i, j));
                    }
                }
            }
            Ok(InducedComponent {
                graph: Graph::new(part.len(), &edges)?,
                vertices: part,
            })
        };
        Ok([build(first)?, build(second)?])
    }

    /// Per-vertex layer sizes, an isomorphism invariant.
    pub fn distance_profile(&self, v: usize) -> Vec<usize> {
        self.distance_partition(v)
            .map(|p| p.layers.iter().map(|l| l.len()).collect())
            .unwrap_or_default()
    }
}

/// The layers `Γ_0(v), .., Γ_ε(v)` around a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistancePartition {
    pub source: usize,
    pub layers: Vec<Vec<usize>>,
    pub eccentricity: usize,
}

impl DistancePartition {
    /// Layer `i`, empty beyond the eccentricity.
    pub fn layer(&self, i: usize) -> &[usize] {
        self.layers.get(i).map(|l| l.as_slice()).unwrap_or(&[])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Girth {
    Finite(usize),
    /// Trees have no cycles.
    Acyclic,
}

impl Girth {
    /// `floor((g - 1) / 2)`, or `None` for trees.
    pub fn arc_bound(&self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some((g - 1) / 2),
            Girth::Acyclic => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => write!(f, "acyclic"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct QuotientGraph {
    pub graph: Graph,
    pub blocks_with_internal_edges: Vec<usize>,
}

impl QuotientGraph {
    pub fn block_has_internal_edge(&self) -> bool {
        !self.blocks_with_internal_edges.is_empty()
    }
}

/// An induced subgraph with its local-to-global vertex map.
#[derive(Clone, Debug)]
pub struct InducedComponent {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}
