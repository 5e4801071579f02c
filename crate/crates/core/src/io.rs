//! graph6 encoding/decoding and DOT export.
//!
//! graph6 follows the format description shipped with nauty: a size prefix
//! `N(n)` followed by the upper triangle of the adjacency matrix in column
//! order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits per byte and
//! offset by 63.

use thiserror::Error;

use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {0:#04x} outside the graph6 range 63..=126")]
    BadByte(u8),
    #[error("graph6 body has {found} bytes, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("non-zero padding bits")]
    Padding,
    #[error("graph too large for graph6 ({0} vertices)")]
    TooLarge(usize),
}

fn push_size(out: &mut Vec<u8>, n: usize) -> Result<(), Graph6Error> {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else if n <= 68_719_476_735 {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        return Err(Graph6Error::TooLarge(n));
    }
    Ok(())
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    push_size(&mut out, n).expect("vertex count fits graph6");
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Graph6Error::BadByte(b));
    }
    let sixes = |s: &[u8]| s.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    let (n, body) = if bytes[0] != 126 {
        (bytes[0] as usize - 63, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::Length { expected: 4, found: bytes.len() });
        }
        (sixes(&bytes[1..4]), &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(Graph6Error::Length { expected: 8, found: bytes.len() });
        }
        (sixes(&bytes[2..8]), &bytes[8..])
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::Length { expected, found: body.len() });
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (k..expected * 6).any(bit) {
        return Err(Graph6Error::Padding);
    }
    Ok(Graph::from_edges(n, edges).expect("decoded edges are in range"))
}

/// Undirected DOT rendering; the graph name (if any) becomes a label.
pub fn to_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    if let Some(name) = g.name() {
        s.push_str(&format!("  label=\"{}\";\n", name.replace('"', "\\\"")));
    }
    for v in g.vertices() {
        s.push_str(&format!("  {v};\n"));
    }
    for &(u, v) in g.edges() {
        s.push_str(&format!("  {u} -- {v};\n"));
    }
    s.push_str("}\n");
    s
}
