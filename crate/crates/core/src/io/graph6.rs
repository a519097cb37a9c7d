//! graph6 codec (the nauty format: `N(n)` header followed by the upper
//! triangle, column by column, in 6-bit big-endian groups offset by 63).

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &[u8] = b">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn graph6_encode(g: &Graph) -> Vec<u8> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let (mut acc, mut filled) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    out
}

fn decode_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Decode {
        offset,
        message: message.into(),
    }
}

fn sextet(bytes: &[u8], at: usize) -> Result<usize> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
        Some(&b) => Err(decode_err(at, format!("byte 0x{b:02x} outside the graph6 range 63..=126"))),
        None => Err(decode_err(at, "unexpected end of input")),
    }
}

/// Decodes one graph6 record. An optional `>>graph6<<` header and one
/// trailing newline are accepted; anything else must be canonical.
pub fn graph6_decode(input: &[u8]) -> Result<Graph> {
    let base = if input.starts_with(HEADER) { HEADER.len() } else { 0 };
    let mut bytes = &input[base..];
    if let Some(stripped) = bytes.strip_suffix(b"\n") {
        bytes = stripped;
    }
    let err_at = |off: usize, e: Error| match e {
        Error::Decode { offset, message } => decode_err(off + offset, message),
        other => other,
    };
    let sx = |at: usize| sextet(bytes, at).map_err(|e| err_at(base, e));

    let (n, body) = if bytes.first() == Some(&126) {
        if bytes.get(1) == Some(&126) {
            let mut n = 0;
            for i in 2..8 {
                n = n << 6 | sx(i)?;
            }
            if n <= 258_047 {
                return Err(decode_err(base, format!("non-canonical 8-byte size header for n={n}")));
            }
            (n, 8)
        } else {
            let mut n = 0;
            for i in 1..4 {
                n = n << 6 | sx(i)?;
            }
            if n <= 62 {
                return Err(decode_err(base, format!("non-canonical 4-byte size header for n={n}")));
            }
            (n, 4)
        }
    } else {
        (sx(0)?, 1)
    };

    for i in body..bytes.len() {
        sx(i)?;
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let got = bytes.len() - body.min(bytes.len());
    if got != expected {
        return Err(decode_err(
            base + body + got.min(expected),
            format!("expected {expected} data bytes for n={n}, found {got}"),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = sx(body + k / 6)?;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body + expected - 1;
        if sx(last)? & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(decode_err(base + last, "nonzero padding bits"));
        }
    }
    Graph::with_named_vertices(n, edges)
}
