//! graph6 codec per the standard formats specification: bit-packed upper
//! triangle, column-major, 6-bit chunks offset by 63. One graph per line in
//! corpus files. sparse6 is deliberately not supported; the graphs here are
//! small and dense enough that it buys nothing.

use crate::{Error, Graph, Result, MAX_VERTICES};

const OFFSET: u8 = 63;

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 line (without the trailing newline).
pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6Header);
    }
    // Optional ">>graph6<<" prefix is part of the standard.
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.is_empty() {
        return Err(Error::Graph6Header);
    }

    let (n, header_len) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(Error::Graph6Header);
        }
        if bytes[1] == b'~' {
            // 8-byte form encodes n >= 258048, far beyond our cap.
            let mut n: usize = 0;
            if bytes.len() < 8 {
                return Err(Error::Graph6Header);
            }
            for (i, &b) in bytes[2..8].iter().enumerate() {
                if !(OFFSET..=126).contains(&b) {
                    return Err(Error::Graph6InvalidByte {
                        byte: b,
                        offset: 2 + i,
                    });
                }
                n = n << 6 | (b - OFFSET) as usize;
            }
            return Err(Error::Graph6CountOutOfRange(n));
        }
        let mut n: usize = 0;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            if !(OFFSET..=126).contains(&b) {
                return Err(Error::Graph6InvalidByte {
                    byte: b,
                    offset: 1 + i,
                });
            }
            n = n << 6 | (b - OFFSET) as usize;
        }
        if n < 63 {
            return Err(Error::Graph6Header);
        }
        (n, 4)
    } else {
        let b = bytes[0];
        if !(OFFSET..=125).contains(&b) {
            return Err(Error::Graph6Header);
        }
        ((b - OFFSET) as usize, 1)
    };

    if n > MAX_VERTICES {
        return Err(Error::Graph6CountOutOfRange(n));
    }

    let expected = payload_len(n);
    let payload = &bytes[header_len..];
    if payload.len() < expected {
        return Err(Error::Graph6Truncated {
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Error::Graph6TrailingGarbage);
    }

    let mut adj = vec![0u64; n];
    let mut bit_index = 0usize;
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    for (k, &b) in payload.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::Graph6InvalidByte {
                byte: b,
                offset: header_len + k,
            });
        }
        let group = b - OFFSET;
        for shift in (0..6).rev() {
            let bit = group >> shift & 1;
            if bit_index < pairs.len() {
                if bit == 1 {
                    let (i, j) = pairs[bit_index];
                    adj[i] |= 1u64 << j;
                    adj[j] |= 1u64 << i;
                }
            } else if bit == 1 {
                // Padding bits must be zero.
                return Err(Error::Graph6TrailingGarbage);
            }
            bit_index += 1;
        }
    }

    Ok(Graph::from_rows(adj))
}

/// Encodes a graph as one graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    }
    let mut group = 0u8;
    let mut count = 0u8;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            count += 1;
            if count == 6 {
                out.push(group + OFFSET);
                group = 0;
                count = 0;
            }
        }
    }
    if count > 0 {
        out.push((group << (6 - count)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ascii")
}

/// Parses a whole corpus: one graph per non-empty line.
pub fn parse_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(from_graph6)
        .collect()
}
