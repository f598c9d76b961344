//! graph6 text encoding for graphs with at most 62 vertices.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count expressible with the one-byte size prefix.
pub const GRAPH6_MAX_VERTICES: usize = 62;

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n > GRAPH6_MAX_VERTICES {
        return Err(Error::UnsupportedSize(format!(
            "graph6 output is limited to {GRAPH6_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let bit_len = n * (n - 1) / 2;
    let mut out = String::with_capacity(1 + bit_len.div_ceil(6));
    out.push((n as u8 + 63) as char);

    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and surrounding
/// whitespace are ignored.
pub fn decode(text: &str) -> Result<Graph> {
    let body = text.trim();
    let body = body.strip_prefix(HEADER).unwrap_or(body);
    let bytes = body.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Error::Graph6("empty input".into()));
    };
    if let Some(bad) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Graph6(format!(
            "byte {bad} ({:#04x}) is outside the printable range 63..=126",
            bytes[bad]
        )));
    }
    if first == 126 {
        return Err(Error::UnsupportedSize(
            "graph6 inputs with more than 62 vertices are not supported".into(),
        ));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Error::UnsupportedSize("graph with zero vertices".into()));
    }
    let bit_len = n * (n - 1) / 2;
    let expected = bit_len.div_ceil(6);
    let data = &bytes[1..];
    if data.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            data.len()
        )));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.insert(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Decodes a multi-line stream, skipping blank lines and bare headers. Each
/// entry carries its 1-based line number so callers can report per-line
/// failures.
pub fn decode_lines(text: &str) -> Vec<(usize, Result<Graph>)> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !matches!(line.trim(), "" | HEADER))
        .map(|(i, line)| (i + 1, decode(line)))
        .collect()
}
