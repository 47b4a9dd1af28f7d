//! Graph files.
//!
//! Text form: a header line `n m`, then `m` lines `u v` (0-based vertices).
//! Blank lines and `#` comments are ignored. JSON form:
//! `{"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]}`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses either graph-file form; JSON is detected by a leading `{`.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    if text.trim_start().starts_with('{') {
        let parsed: GraphJson = serde_json::from_str(text).map_err(|e| err(e.line(), e.column(), e.to_string()))?;
        return Graph::new(parsed.n, &parsed.edges);
    }

    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let mut numbers = Vec::with_capacity(2);
        let mut column = 1;
        for token in content.split(|c: char| c.is_whitespace()) {
            if !token.is_empty() {
                let value = token.parse::<usize>().map_err(|_| {
                    err(
                        line,
                        column,
                        format!("expected a non-negative integer, found `{token}`"),
                    )
                })?;
                numbers.push((value, column));
            }
            column += token.len() + 1;
        }
        if numbers.len() != 2 {
            let column = numbers.get(2).map_or(1, |&(_, c)| c);
            return Err(err(
                line,
                column,
                format!("expected two integers, found {}", numbers.len()),
            ));
        }
        let (a, b) = (numbers[0].0, numbers[1].0);
        match header {
            None => header = Some((a, b)),
            Some((n, _)) => {
                for &(v, column) in &numbers {
                    if v >= n {
                        return Err(err(
                            line,
                            column,
                            format!("vertex {v} is out of range for {n} vertices"),
                        ));
                    }
                }
                if a == b {
                    return Err(err(line, numbers[1].1, format!("loop at vertex {a}")));
                }
                if let Some(first) = seen.insert((a.min(b), a.max(b)), line) {
                    return Err(err(line, 1, format!("edge {{{a}, {b}}} repeats line {first}")));
                }
                edges.push((a, b));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| err(1, 1, "missing `n m` header"))?;
    if edges.len() != m {
        return Err(err(
            last_line.max(1),
            1,
            format!("header announces {m} edges but {} were given", edges.len()),
        ));
    }
    Graph::new(n, &edges)
}

pub fn write_graph_text(graph: &Graph) -> String {
    let edges = graph.edges();
    let mut out = format!("{} {}\n", graph.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn write_graph_json(graph: &Graph) -> String {
    serde_json::to_string(&GraphJson {
        n: graph.n(),
        edges: graph.edges(),
    })
    .expect("graph JSON is always serialisable")
}
