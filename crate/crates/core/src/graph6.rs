//! graph6 text encoding, as written by common graph generators.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn bad(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

/// Parses one graph6 line. Surrounding whitespace and the optional
/// `>>graph6<<` header are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(bad("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(format!("byte {b:#04x} outside the printable graph6 range")));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(bad("graphs with more than 258047 vertices are not supported"));
        }
        if bytes.len() < 4 {
            return Err(bad("truncated vertex count"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(bad(format!(
            "expected {expected} adjacency bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (0x20 >> (k % 6)) != 0 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[body.len() - 1] - 63;
        if last & ((1u8 << (6 - nbits % 6)) - 1) != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Encodes a graph as graph6 (no header, no trailing newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
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
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses a stream with one graph per line, skipping blank lines.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(parse_graph6).collect()
}
