//! McKay's graph6 format: size header, then the upper triangle of the
//! adjacency matrix column by column, six bits per printable byte (+63).

use super::{Graph, GraphError};

/// Largest order accepted by the codec.
pub const MAX_GRAPH6_ORDER: usize = 258;

const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::EmptyGraph6);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(GraphError::BadGraph6Char { pos, ch: b as char });
        }
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n < 63 {
            return Err(GraphError::BadGraph6Header);
        }
        (n, &bytes[4..])
    } else {
        return Err(GraphError::BadGraph6Header);
    };
    if n > MAX_GRAPH6_ORDER {
        return Err(GraphError::TooLarge(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(GraphError::Graph6Length { expected, found: body.len() });
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for k in nbits..expected * 6 {
        if bit(k) {
            return Err(GraphError::Graph6Padding);
        }
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.insert(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes without the optional `>>graph6<<` header or trailing newline.
///
/// Panics if the graph has more than [`MAX_GRAPH6_ORDER`] vertices.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_GRAPH6_ORDER, "graph6 encoding limited to {MAX_GRAPH6_ORDER} vertices");
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
