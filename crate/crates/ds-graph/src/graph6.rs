//! graph6 codec.
//!
//! Format (bit-exact): printable bytes 63..=126. Order n is one byte 63+n
//! for n <= 62, otherwise byte 126 followed by three bytes holding the
//! 18-bit big-endian value (sufficient up to our 1024 cap; the 8-byte tier
//! for n >= 258048 is out of scope). The body packs the upper-triangle
//! adjacency bits in column-major order x(0,1), x(0,2), x(1,2), x(0,3), ...
//! into 6-bit groups, most significant bit first, zero-padded, each group
//! emitted as its value + 63.

use crate::{Graph, MAX_ORDER};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} outside graph6 range 63..=126")]
    BadChar { pos: usize, byte: u8 },
    #[error("truncated header")]
    TruncatedHeader,
    #[error("order {0} exceeds supported maximum {MAX_ORDER}")]
    TooLarge(usize),
    #[error("order 0 is not a valid graph")]
    ZeroOrder,
    #[error("bit body has {got} bytes, expected {expected}")]
    BodyLength { got: usize, expected: usize },
    #[error("padding bits are not zero")]
    BadPadding,
}

/// Number of 6-bit groups for the upper triangle of an order-n graph.
fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadChar { pos, byte: b });
        }
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::TruncatedHeader);
        }
        if bytes[1] == 126 {
            // 8-byte header: orders >= 258048, far beyond our cap.
            return Err(Graph6Error::TooLarge(usize::MAX));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::BodyLength { got: body.len(), expected });
    }
    let mut g = Graph::empty(n).expect("validated order");
    let nbits = n * (n - 1) / 2;
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let group = (body[k / 6] - 63) as usize;
            if group >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j).expect("in range");
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    // Reject nonzero padding so every graph has a unique encoding.
    for pad in nbits..expected * 6 {
        if (body[pad / 6] - 63) as usize >> (5 - pad % 6) & 1 == 1 {
            return Err(Graph6Error::BadPadding);
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut group = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push(63 + group);
                group = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(63 + (group << (6 - used)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
