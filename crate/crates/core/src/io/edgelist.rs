//! Plain edge lists: one `i j` pair per line, 0-based, `#` starts a comment.
//! A line holding a single integer fixes the vertex count; otherwise it is
//! one more than the largest endpoint.

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut declared = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("line {}: bad integer {t:?}", lineno + 1))))
            .collect::<Result<Vec<_>>>()?;
        match nums[..] {
            [n] if declared.is_none() => declared = Some(n),
            [i, j] => edges.push((i, j)),
            _ => return Err(Error::Parse(format!("line {}: expected `i j`", lineno + 1))),
        }
    }
    let implied = edges.iter().map(|&(i, j)| i.max(j) + 1).max().unwrap_or(0);
    let n = declared.unwrap_or(implied);
    if implied > n {
        return Err(Error::Parse(format!("endpoint {} out of range for {n} vertices", implied - 1)));
    }
    LabeledGraph::from_edges(n, &edges).map_err(|e| Error::Parse(e.to_string()))
}

pub fn emit_edge_list(g: &LabeledGraph) -> String {
    let mut s = format!("{}\n", g.order());
    for (i, j) in g.edges() {
        s.push_str(&format!("{i} {j}\n"));
    }
    s
}
