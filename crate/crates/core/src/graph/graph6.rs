//! The graph6 text format used by nauty and most combinatorics tools.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &[u8] = b">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 { offset, message: message.into() }
}

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

/// Encode in canonical graph6 (no header, no trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decode one graph6 string, optionally prefixed by `>>graph6<<` and
/// followed by a line terminator.
pub fn decode(s: &str) -> Result<Graph> {
    let mut bytes = s.as_bytes();
    let mut base = 0;
    if bytes.starts_with(HEADER) {
        bytes = &bytes[HEADER.len()..];
        base = HEADER.len();
    }
    while let Some((&last, rest)) = bytes.split_last() {
        if last == b'\n' || last == b'\r' {
            bytes = rest;
        } else {
            break;
        }
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + i, format!("byte {b:#04x} outside the graph6 range")));
        }
    }
    let digit = |i: usize| -> Result<usize> {
        bytes.get(i).map(|&b| (b - 63) as usize).ok_or_else(|| err(base + i, "truncated size header"))
    };
    let (n, start) = match bytes.first() {
        None => return Err(err(base, "empty input")),
        Some(&126) if bytes.get(1) == Some(&126) => {
            let mut n = 0;
            for i in 2..8 {
                n = (n << 6) | digit(i)?;
            }
            if n <= 258_047 {
                return Err(err(base, "non-canonical 8-byte size header"));
            }
            (n, 8)
        }
        Some(&126) => {
            let mut n = 0;
            for i in 1..4 {
                n = (n << 6) | digit(i)?;
            }
            if n <= 62 {
                return Err(err(base, "non-canonical 4-byte size header"));
            }
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let body = &bytes[start..];
    if body.len() < need {
        return Err(err(base + bytes.len(), format!("truncated adjacency: expected {need} bytes, found {}", body.len())));
    }
    if body.len() > need {
        return Err(err(base + start + need, "trailing bytes after adjacency"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let b = body[k / 6] - 63;
            if b >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let pad = (body[need - 1] - 63) & ((1 << (6 - nbits % 6)) - 1);
        if pad != 0 {
            return Err(err(base + start + need - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Decode every non-empty line of a graph6 file.
pub fn decode_many(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim_end_matches(['\n', '\r']);
        if !trimmed.is_empty() {
            out.push(decode(trimmed).map_err(|e| match e {
                Error::Graph6 { offset: o, message } => Error::Graph6 { offset: offset + o, message },
                other => other,
            })?);
        }
        offset += line.len();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn known_strings() {
        // nauty: the 5-cycle 0-1-2-3-4-0 is "Dhc"
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5)));
        assert_eq!(encode(&c5), "Dhc");
        assert_eq!(encode(&families::petersen()), "IheA@GUAo");
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(encode(&Graph::empty(1)), "@");
    }

    #[test]
    fn round_trip_corpus() {
        for s in ["D?{", "Dhc", "IheA@GUAo", "?", "@", "A_", "E]~o"] {
            assert_eq!(encode(&decode(s).unwrap()), s);
        }
        let big = families::complete(70);
        let s = encode(&big);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), big);
        assert_eq!(decode(&format!(">>graph6<<{s}\n")).unwrap(), big);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(decode(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(decode("D?"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(decode("D?{ "), Err(Error::Graph6 { offset: 3, .. })));
        assert!(matches!(decode("~?"), Err(Error::Graph6 { .. })));
        assert!(matches!(decode("A`"), Err(Error::Graph6 { offset: 1, .. })));
        let lines = decode_many("Dhc\n\nD?{\n").unwrap();
        assert_eq!(lines.len(), 2);
        assert!(matches!(decode_many("Dhc\nD?\n"), Err(Error::Graph6 { offset: 6, .. })));
    }
}
