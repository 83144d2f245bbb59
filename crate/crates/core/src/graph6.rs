//! graph6 text encoding.
//!
//! Orders up to 62 use the one-byte header. 63 and 64 use the `~` plus three
//! byte header so that every representable graph round-trips.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, MAX_ORDER};

const BIAS: u8 = 63;

fn check_byte(offset: usize, byte: u8) -> Result<u8> {
    if (63..=126).contains(&byte) {
        Ok(byte - BIAS)
    } else {
        Err(Error::Graph6Char { offset, byte })
    }
}

/// Encodes `g` as a graph6 string (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(2 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 string. Surrounding whitespace is ignored; an optional
/// `>>graph6<<` header is accepted.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    let lead = text.len() - text.trim_start().len();
    let (body, lead) = match trimmed.strip_prefix(">>graph6<<") {
        Some(rest) => (rest, lead + 10),
        None => (trimmed, lead),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6Empty);
    }
    let first = check_byte(lead, bytes[0])?;
    let (n, header) = if first == 63 {
        if bytes.len() < 4 {
            return Err(Error::Graph6Length {
                expected: 4,
                found: bytes.len(),
            });
        }
        if bytes[1] == 126 {
            // 8-byte header: beyond our vertex cap whatever it says.
            return Err(Error::OrderOverflow { order: MAX_ORDER + 1 });
        }
        let mut n = 0usize;
        for (k, &b) in bytes[1..4].iter().enumerate() {
            n = (n << 6) | check_byte(lead + 1 + k, b)? as usize;
        }
        (n, 4)
    } else {
        (first as usize, 1)
    };
    if n > MAX_ORDER {
        return Err(Error::OrderOverflow { order: n });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = header + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::Graph6Length {
            expected,
            found: bytes.len(),
        });
    }
    let data = bytes[header..]
        .iter()
        .enumerate()
        .map(|(k, &b)| check_byte(lead + header + k, b))
        .collect::<Result<Vec<u8>>>()?;
    let mut rows = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if data[k / 6] & (0x20 >> (k % 6)) != 0 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// Decodes a newline-delimited file of graph6 strings, skipping blank lines.
pub fn parse_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(from_graph6)
        .collect()
}
