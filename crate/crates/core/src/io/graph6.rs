//! graph6 encoding.
//!
//! A graph6 line is the size prefix `N(n)` followed by the upper triangle of
//! the adjacency matrix, read column by column (`x(0,1) x(0,2) x(1,2)
//! x(0,3) …`), packed six bits per byte big-endian and offset by 63. The last
//! byte is zero-padded.

use thiserror::Error;

use crate::graph::Graph;

/// Largest order representable in graph6 (36-bit size field).
pub const GRAPH6_MAX_ORDER: usize = 68_719_476_735;

const OFFSET: u8 = 63;
const LONG: u8 = 126;
const HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed graph6 size prefix: {0}")]
    MalformedHeader(&'static str),
    #[error("invalid graph6 byte {byte:#04x} at offset {offset}")]
    InvalidCharacter { byte: u8, offset: usize },
    #[error("graph6 bitstream has {found} data bytes, expected {expected}")]
    TruncatedBitstream { expected: usize, found: usize },
    #[error("graph6 padding bits are not zero")]
    NonZeroPadding,
    #[error("graph of order {0} exceeds the graph6 limit")]
    GraphTooLarge(usize),
}

pub fn parse_graph6(line: &[u8]) -> Result<Graph, Graph6Error> {
    let line = trim_line(line);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    if let Some(offset) = line.iter().position(|b| !(OFFSET..=LONG).contains(b)) {
        return Err(Graph6Error::InvalidCharacter {
            byte: line[offset],
            offset,
        });
    }
    let (n, body) = parse_size(line)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::TruncatedBitstream {
            expected,
            found: body.len(),
        });
    }
    let bit = |k: usize| (body[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Graph6Error::NonZeroPadding);
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
    Ok(Graph::new(n, edges).expect("upper-triangle bits give a simple graph"))
}

pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    if n > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::GraphTooLarge(n));
    }
    let mut out = size_prefix(n);
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    for &(i, j) in g.edges() {
        // column-major position of (i, j), i < j
        let k = j * (j - 1) / 2 + i;
        data[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(data.into_iter().map(|b| b + OFFSET));
    Ok(String::from_utf8(out).expect("graph6 is printable ASCII"))
}

fn trim_line(line: &[u8]) -> &[u8] {
    let mut end = line.len();
    while end > 0 && matches!(line[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    &line[..end]
}

fn size_prefix(n: usize) -> Vec<u8> {
    let six = |shift: u32| ((n >> shift) & 0x3f) as u8 + OFFSET;
    if n <= 62 {
        vec![n as u8 + OFFSET]
    } else if n <= 258_047 {
        vec![LONG, six(12), six(6), six(0)]
    } else {
        vec![
            LONG,
            LONG,
            six(30),
            six(24),
            six(18),
            six(12),
            six(6),
            six(0),
        ]
    }
}

fn parse_size(line: &[u8]) -> Result<(usize, &[u8]), Graph6Error> {
    let value = |bytes: &[u8]| {
        bytes
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize)
    };
    match line {
        [] => Err(Graph6Error::MalformedHeader("empty line")),
        [LONG, LONG, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Graph6Error::MalformedHeader("truncated 36-bit size"));
            }
            let n = value(&rest[..6]);
            if n <= 258_047 {
                return Err(Graph6Error::MalformedHeader("non-minimal 36-bit size"));
            }
            Ok((n, &rest[6..]))
        }
        [LONG, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Graph6Error::MalformedHeader("truncated 18-bit size"));
            }
            let n = value(&rest[..3]);
            if n <= 62 {
                return Err(Graph6Error::MalformedHeader("non-minimal 18-bit size"));
            }
            Ok((n, &rest[3..]))
        }
        [first, rest @ ..] => Ok(((first - OFFSET) as usize, rest)),
    }
}
