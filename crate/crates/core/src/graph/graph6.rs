//! The graph6 text encoding: a size prefix followed by the upper triangle of
//! the adjacency matrix in column order, six bits per printable character
//! offset by 63.

use std::fmt;

use thiserror::Error;

use super::Graph;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    Empty,
    /// Byte outside the printable range 63..=126.
    InvalidCharacter(u8),
    /// The encoded size needs more bytes than were given.
    Truncated { expected: usize, found: usize },
    /// Bytes remain after the adjacency data.
    TrailingData { expected: usize, found: usize },
    /// Padding bits in the final byte must be zero.
    NonZeroPadding,
}

impl fmt::Display for Graph6ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6ErrorKind::Empty => f.write_str("empty input"),
            Graph6ErrorKind::InvalidCharacter(b) => {
                write!(f, "invalid character 0x{b:02x} (expected 63..=126)")
            }
            Graph6ErrorKind::Truncated { expected, found } => {
                write!(f, "truncated: expected {expected} bytes, found {found}")
            }
            Graph6ErrorKind::TrailingData { expected, found } => {
                write!(f, "trailing data: expected {expected} bytes, found {found}")
            }
            Graph6ErrorKind::NonZeroPadding => f.write_str("non-zero padding bits"),
        }
    }
}

/// A graph6 decoding failure at a byte offset of the input line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 error at byte {offset}: {kind}")]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

fn err(offset: usize, kind: Graph6ErrorKind) -> Graph6Error {
    Graph6Error { offset, kind }
}

/// Decodes one graph6 line. A trailing newline and an optional `>>graph6<<`
/// header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let start = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = &text.as_bytes()[start..];
    if bytes.is_empty() {
        return Err(err(start, Graph6ErrorKind::Empty));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(start + i, Graph6ErrorKind::InvalidCharacter(b)));
        }
    }
    let six = |i: usize| u64::from(bytes[i] - 63);

    let (n, prefix) = if bytes[0] != 126 {
        (six(0), 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            let kind = Graph6ErrorKind::Truncated { expected: 8, found: bytes.len() };
            return Err(err(start + bytes.len(), kind));
        }
        ((2..8).fold(0u64, |acc, i| (acc << 6) | six(i)), 8)
    } else {
        if bytes.len() < 4 {
            let kind = Graph6ErrorKind::Truncated { expected: 4, found: bytes.len() };
            return Err(err(start + bytes.len(), kind));
        }
        ((1..4).fold(0u64, |acc, i| (acc << 6) | six(i)), 4)
    };

    let bits = u128::from(n) * u128::from(n.saturating_sub(1)) / 2;
    let data_len = bits.div_ceil(6);
    let found = (bytes.len() - prefix) as u128;
    if found < data_len {
        let kind = Graph6ErrorKind::Truncated {
            expected: prefix + data_len as usize,
            found: bytes.len(),
        };
        return Err(err(start + bytes.len(), kind));
    }
    if found > data_len {
        let expected = prefix + data_len as usize;
        let kind = Graph6ErrorKind::TrailingData { expected, found: bytes.len() };
        return Err(err(start + expected, kind));
    }

    let n = n as usize;
    let data = &bytes[prefix..];
    let mut edges = Vec::new();
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let last = data[data.len() - 1] - 63;
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(err(start + bytes.len() - 1, Graph6ErrorKind::NonZeroPadding));
        }
    }
    Ok(Graph::from_unsorted(n, edges))
}

/// Encodes a graph as a graph6 line without header or newline.
pub fn write_graph6(graph: &Graph) -> String {
    let n = graph.vertex_count();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n as u64 >> shift) & 63) as u8 + 63);
        }
    }
    let bits: Vec<bool> = (1..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .map(|(u, v)| graph.has_edge(u, v))
        .collect();
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for i in 0..6 {
            byte = (byte << 1) | u8::from(chunk.get(i).copied().unwrap_or(false));
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
