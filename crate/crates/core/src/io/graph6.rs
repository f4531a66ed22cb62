//! graph6 for `n <= 62`: a header byte `n + 63`, then the column-major upper
//! triangle packed six bits per byte, most significant first, each byte
//! offset by 63.

use crate::canon::{CanonicalCode, PairGraph};
use crate::error::{Error, Result};
use crate::graph::{pair_at, pair_count, LabeledGraph};

pub const GRAPH6_MAX_N: usize = 62;

fn body_len(n: usize) -> usize {
    pair_count(n).div_ceil(6)
}

pub fn parse_graph6(s: &str) -> Result<LabeledGraph> {
    let bytes = s.as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(Error::Parse("empty graph6 string".into()));
    };
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Parse(format!("byte {} at offset {pos} is outside 63..=126", bytes[pos])));
    }
    if head == 126 {
        return Err(Error::Parse("extended graph6 headers (n > 62) are not supported".into()));
    }
    let n = (head - 63) as usize;
    let body = &bytes[1..];
    if body.len() != body_len(n) {
        return Err(Error::Parse(format!(
            "graph6 for {n} vertices needs {} data bytes, got {}",
            body_len(n),
            body.len()
        )));
    }
    let m = pair_count(n);
    let mut g = LabeledGraph::empty(n)?;
    for (k, &byte) in body.iter().enumerate() {
        let bits = byte - 63;
        for b in 0..6 {
            if bits >> (5 - b) & 1 == 0 {
                continue;
            }
            let idx = 6 * k + b;
            if idx >= m {
                return Err(Error::Parse("nonzero padding bits".into()));
            }
            let (i, j) = pair_at(idx);
            g.add_edge(i, j)?;
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &LabeledGraph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_N {
        return Err(Error::Argument(format!("graph6 output supports n <= {GRAPH6_MAX_N}, got {n}")));
    }
    let m = pair_count(n);
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    for k in 0..body_len(n) {
        let mut bits = 0u8;
        for b in 0..6 {
            let idx = 6 * k + b;
            if idx < m {
                let (i, j) = pair_at(idx);
                bits |= u8::from(g.has_edge(i, j)) << (5 - b);
            }
        }
        out.push(bits + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// graph6 of the graph a simple canonical code describes.
pub fn code_to_graph6(code: &CanonicalCode<bool>) -> Result<String> {
    emit_graph6(&LabeledGraph::from_code(code))
}
