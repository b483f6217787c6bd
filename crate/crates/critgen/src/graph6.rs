//! graph6 encoding and decoding.
//!
//! Only the short form is supported (n <= 62): one length byte `n + 63`
//! followed by ceil(n(n-1)/2 / 6) payload bytes in `[63, 126]`, packing the
//! upper-triangle adjacency bits column-major, i.e. x(0,1), x(0,2), x(1,2),
//! x(0,3), ..., most significant bit first, zero padded.

use crate::graph::{Graph, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("byte {0:#x} outside the graph6 range [63, 126]")]
    ByteOutOfRange(u8),
    #[error("payload too short: expected {expected} bytes, got {got}")]
    TruncatedPayload { expected: usize, got: usize },
    #[error("padding bit set in the final payload byte")]
    TrailingBits,
    #[error("graph6 long form not supported (n > {MAX_VERTICES})")]
    Oversize,
}

const HEADER: &str = ">>graph6<<";

/// Decode one graph6 line. An optional `>>graph6<<` header is stripped.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::TruncatedPayload { expected: 1, got: 0 });
    }
    let b0 = bytes[0];
    if !(63..=126).contains(&b0) {
        return Err(Graph6Error::ByteOutOfRange(b0));
    }
    if b0 == 126 {
        // long-form escape
        return Err(Graph6Error::Oversize);
    }
    let n = (b0 - 63) as usize;
    let nbits = n * (n - 1) / 2;
    let npay = nbits.div_ceil(6);
    if bytes.len() - 1 < npay {
        return Err(Graph6Error::TruncatedPayload { expected: npay, got: bytes.len() - 1 });
    }
    // extra bytes after the payload are also a malformed line
    if bytes.len() - 1 > npay {
        return Err(Graph6Error::TrailingBits);
    }
    let mut g = Graph::empty(n).expect("n <= 62 by construction");
    let mut bit = 0usize;
    let mut edges = Vec::new();
    for &b in &bytes[1..] {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange(b));
        }
        let v = b - 63;
        for k in (0..6).rev() {
            let set = v >> k & 1 == 1;
            if bit >= nbits {
                if set {
                    return Err(Graph6Error::TrailingBits);
                }
            } else if set {
                edges.push(pair_at(bit));
            }
            bit += 1;
        }
    }
    for (i, j) in edges {
        g = add_edge(g, i, j);
    }
    Ok(g)
}

/// Encode a graph as a graph6 line (no header).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let nbits = n.saturating_sub(1) * n / 2;
    let mut out = vec![n as u8 + 63];
    let mut acc = 0u8;
    let mut fill = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            fill += 1;
            if fill == 6 {
                out.push(acc + 63);
                acc = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        out.push((acc << (6 - fill)) + 63);
    }
    debug_assert_eq!(out.len(), 1 + nbits.div_ceil(6));
    String::from_utf8(out).unwrap()
}

/// Pair (i, j) with i < j addressed by the column-major bit index.
fn pair_at(mut bit: usize) -> (usize, usize) {
    let mut j = 1;
    while bit >= j {
        bit -= j;
        j += 1;
    }
    (bit, j)
}

fn add_edge(g: Graph, i: usize, j: usize) -> Graph {
    // rebuild via from_edges would be quadratic per edge; splice instead
    let n = g.n();
    let mut edges = g.edges();
    edges.push((i, j));
    Graph::from_edges(n, &edges).unwrap()
}
