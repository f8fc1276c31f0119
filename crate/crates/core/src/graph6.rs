//! The graph6 text encoding: a size header followed by the upper triangle
//! of the adjacency matrix, column by column, packed six bits per byte with
//! every byte offset by 63.

use crate::{Error, Graph, Result};

const OFFSET: u8 = 63;
const LONG: u8 = 126;
const HEADER: &[u8] = b">>graph6<<";

fn err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(LONG);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + OFFSET));
    } else {
        out.extend([LONG, LONG]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + OFFSET));
    }
}

fn sextet(b: u8) -> Result<usize> {
    if (OFFSET..=LONG).contains(&b) {
        Ok((b - OFFSET) as usize)
    } else {
        Err(err(format!("byte {b} outside 63..=126")))
    }
}

/// Returns `n` and the number of header bytes consumed.
fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let word = |range: std::ops::Range<usize>| -> Result<usize> {
        let chunk = bytes.get(range).ok_or_else(|| err("truncated size header"))?;
        chunk.iter().try_fold(0usize, |acc, &b| Ok(acc << 6 | sextet(b)?))
    };
    match bytes {
        [] => Err(err("empty input")),
        [LONG, LONG, ..] => {
            let n = word(2..8)?;
            if n <= 258_047 {
                return Err(err("non-canonical size header"));
            }
            Ok((n, 8))
        }
        [LONG, ..] => {
            let n = word(1..4)?;
            if n <= 62 {
                return Err(err("non-canonical size header"));
            }
            Ok((n, 4))
        }
        [b, ..] => Ok((sextet(*b)?, 1)),
    }
}

/// Decodes one graph. An optional `>>graph6<<` prefix and one trailing line
/// break are accepted.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph> {
    let mut bytes = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    if let Some(rest) = bytes.strip_suffix(b"\n") {
        bytes = rest.strip_suffix(b"\r").unwrap_or(rest);
    }
    let (n, used) = decode_size(bytes)?;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let body = &bytes[used..];
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(err(format!("expected {expected} data bytes for n = {n}, found {}", body.len())));
    }
    let data = body.iter().map(|&b| sextet(b)).collect::<Result<Vec<_>>>()?;
    let bit = |k: usize| data[k / 6] >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(err("nonzero padding bits"));
    }
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
    Graph::new(n, edges)
}

/// Encodes a graph without a trailing newline.
pub fn emit_graph6(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    out
}

/// [`emit_graph6`] as a `String`.
pub fn to_graph6_string(g: &Graph) -> String {
    String::from_utf8(emit_graph6(g)).expect("graph6 is ASCII")
}
