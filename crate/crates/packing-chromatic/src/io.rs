//! Text formats: graph6 (bit-exact, short and long size headers), the
//! DIMACS edge format, and atomic file output.
//!
//! graph6 export preserves vertex order so label tables stay aligned; a
//! label sidecar travels separately as JSON.

use std::fs;
use std::io::Write;
use std::path::Path;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("{n} vertices exceed the graph6 size range")]
    TooLarge { n: usize },
    #[error("malformed graph6 size header at byte {offset}")]
    MalformedHeader { offset: usize },
    #[error("invalid graph6 character {byte:#04x} at byte {offset}")]
    InvalidChar { offset: usize, byte: u8 },
    #[error("graph6 bit data ends early: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage after graph6 data at byte {offset}")]
    TrailingGarbage { offset: usize },
    #[error("nonzero padding bits in the final graph6 byte at offset {offset}")]
    NonzeroPadding { offset: usize },
}

const SHORT_MAX: usize = 62;
const LONG_MAX: usize = 258_047;
const WIDE_MAX: usize = 68_719_476_735;

fn long_header(n: usize) -> [u8; 4] {
    [
        126,
        63 + (n >> 12 & 63) as u8,
        63 + (n >> 6 & 63) as u8,
        63 + (n & 63) as u8,
    ]
}

fn wide_header(n: usize) -> [u8; 8] {
    let mut h = [126u8, 126, 0, 0, 0, 0, 0, 0];
    for (i, slot) in h[2..].iter_mut().enumerate() {
        *slot = 63 + (n >> (6 * (5 - i)) & 63) as u8;
    }
    h
}

/// Encodes with the smallest header the vertex count allows.
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    let header: Vec<u8> = if n <= SHORT_MAX {
        vec![63 + n as u8]
    } else if n <= LONG_MAX {
        long_header(n).to_vec()
    } else if n <= WIDE_MAX {
        wide_header(n).to_vec()
    } else {
        return Err(Graph6Error::TooLarge { n });
    };
    Ok(encode_with_header(g, header))
}

/// Encodes with the 4-byte size header regardless of `n`; decoders must
/// accept small graphs written this way.
pub fn encode_graph6_long(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    if n > LONG_MAX {
        return Err(Graph6Error::TooLarge { n });
    }
    Ok(encode_with_header(g, long_header(n).to_vec()))
}

fn encode_with_header(g: &Graph, mut bytes: Vec<u8>) -> String {
    let n = g.vertex_count();
    let mut acc = 0u8;
    let mut filled = 0u8;
    // upper-triangle bits column by column: (0,1), (0,2), (1,2), (0,3), ...
    for v in 1..n as VertexId {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                bytes.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

fn header_value(bytes: &[u8], at: usize, width: usize) -> Result<usize, Graph6Error> {
    let mut value = 0usize;
    for i in 0..width {
        let offset = at + i;
        let byte = *bytes
            .get(offset)
            .ok_or(Graph6Error::MalformedHeader { offset })?;
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::MalformedHeader { offset });
        }
        value = value << 6 | (byte - 63) as usize;
    }
    Ok(value)
}

fn parse_header(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    match bytes.first() {
        None => Err(Graph6Error::MalformedHeader { offset: 0 }),
        Some(126) => match bytes.get(1) {
            Some(126) => Ok((header_value(bytes, 2, 6)?, 8)),
            Some(_) => Ok((header_value(bytes, 1, 3)?, 4)),
            None => Err(Graph6Error::MalformedHeader { offset: 1 }),
        },
        Some(&b) if (63..=125).contains(&b) => Ok(((b - 63) as usize, 1)),
        Some(_) => Err(Graph6Error::MalformedHeader { offset: 0 }),
    }
}

/// Decodes one graph6 line, rejecting malformed headers, bad characters,
/// short or over-long bit data, and nonzero padding — each with the byte
/// offset of the problem.
pub fn decode_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let (n, data_start) = parse_header(bytes)?;
    // vertex ids are u32; larger headers would also overflow the bit count
    if n > u32::MAX as usize - 1 {
        return Err(Graph6Error::TooLarge { n });
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    let found = bytes.len() - data_start;
    if found < expected {
        return Err(Graph6Error::Truncated { expected, found });
    }
    if found > expected {
        return Err(Graph6Error::TrailingGarbage {
            offset: data_start + expected,
        });
    }
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    let mut pair = (0u64, 1u64); // (u, v) cursor over the upper triangle
    for i in 0..expected {
        let offset = data_start + i;
        let byte = bytes[offset];
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidChar { offset, byte });
        }
        let group = byte - 63;
        for shift in (0..6).rev() {
            let bit = group >> shift & 1;
            if bit_index >= bit_count {
                if bit == 1 {
                    return Err(Graph6Error::NonzeroPadding { offset });
                }
                continue;
            }
            if bit == 1 {
                edges.push((pair.0 as VertexId, pair.1 as VertexId));
            }
            bit_index += 1;
            pair.0 += 1;
            if pair.0 == pair.1 {
                pair.0 = 0;
                pair.1 += 1;
            }
        }
    }
    Ok(Graph::build(n, &edges).expect("triangle bits cannot repeat an edge"))
}

#[derive(Debug, Error)]
pub enum DimacsError {
    #[error("DIMACS line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("DIMACS input has no 'p edge' header")]
    MissingHeader,
    #[error("DIMACS header promises {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `p edge n m` followed by one ascending `e u v` line per edge, 1-based.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

pub fn read_dimacs(text: &str) -> Result<Graph, DimacsError> {
    let mut n: Option<usize> = None;
    let mut declared_m = 0usize;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if n.is_some() {
                    return Err(DimacsError::Parse {
                        line: line_no,
                        reason: "second problem line".into(),
                    });
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(DimacsError::Parse {
                        line: line_no,
                        reason: "expected 'p edge <n> <m>'".into(),
                    });
                }
                n = Some(fields[2].parse().map_err(|_| DimacsError::Parse {
                    line: line_no,
                    reason: "vertex count is not a number".into(),
                })?);
                declared_m = fields[3].parse().map_err(|_| DimacsError::Parse {
                    line: line_no,
                    reason: "edge count is not a number".into(),
                })?;
            }
            "e" => {
                if n.is_none() {
                    return Err(DimacsError::MissingHeader);
                }
                if fields.len() != 3 {
                    return Err(DimacsError::Parse {
                        line: line_no,
                        reason: "expected 'e <u> <v>'".into(),
                    });
                }
                let parse = |s: &str| -> Result<u64, DimacsError> {
                    s.parse().map_err(|_| DimacsError::Parse {
                        line: line_no,
                        reason: "endpoint is not a number".into(),
                    })
                };
                let (u, v) = (parse(fields[1])?, parse(fields[2])?);
                if u == 0 || v == 0 {
                    return Err(DimacsError::Parse {
                        line: line_no,
                        reason: "DIMACS ids are 1-based".into(),
                    });
                }
                edges.push(((u - 1) as VertexId, (v - 1) as VertexId));
            }
            other => {
                return Err(DimacsError::Parse {
                    line: line_no,
                    reason: format!("unknown record type {other:?}"),
                })
            }
        }
    }
    let n = n.ok_or(DimacsError::MissingHeader)?;
    if edges.len() != declared_m {
        return Err(DimacsError::EdgeCountMismatch {
            expected: declared_m,
            found: edges.len(),
        });
    }
    Ok(Graph::build(n, &edges)?)
}

/// Writes through a temporary sibling and renames over the target, so a
/// crash never leaves a half-written file.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = std::path::PathBuf::from(tmp);
    {
        let mut file = fs::File::create(&tmp)?;
        file.write_all(contents.as_bytes())?;
        file.sync_all()?;
    }
    fs::rename(&tmp, path)
}
