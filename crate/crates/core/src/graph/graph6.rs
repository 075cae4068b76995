//! graph6 reader and writer.
//!
//! The body is the upper triangle of the adjacency matrix read column by
//! column ((0,1), (0,2), (1,2), (0,3), ...), packed six bits per byte with an
//! offset of 63. Writers emit no header; readers accept an optional
//! `>>graph6<<` prefix and trailing line terminators.

use super::Graph;
use crate::error::{Error, Result};

pub const HEADER: &[u8] = b">>graph6<<";

const MAX_SHORT: usize = 62;
const MAX_MEDIUM: usize = 258_047;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= MAX_SHORT {
        out.push(n as u8 + 63);
    } else if n <= MAX_MEDIUM {
        out.push(126);
        push_size_bytes(&mut out, n as u64, 3);
    } else {
        out.push(126);
        out.push(126);
        push_size_bytes(&mut out, n as u64, 6);
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            acc = acc << 1 | u8::from(col.binary_search(&i).is_ok());
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn push_size_bytes(out: &mut Vec<u8>, n: u64, count: u32) {
    for k in (0..count).rev() {
        out.push(((n >> (6 * k)) & 0x3f) as u8 + 63);
    }
}

/// Decodes one graph. Offsets in errors count from the first byte of `text`,
/// header included.
pub fn decode(text: &[u8]) -> Result<Graph> {
    let mut end = text.len();
    while end > 0 && matches!(text[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let text = &text[..end];
    let mut pos = if text.starts_with(HEADER) { HEADER.len() } else { 0 };

    let byte_at = |pos: usize| -> Result<u8> {
        let b = *text.get(pos).ok_or_else(|| err(pos, "unexpected end of input"))?;
        if !(63..=126).contains(&b) {
            return Err(err(pos, format!("byte {b:#04x} outside the graph6 range 63..=126")));
        }
        Ok(b - 63)
    };

    let n = match byte_at(pos)? {
        63 => {
            if byte_at(pos + 1)? == 63 {
                let n = read_size(&byte_at, pos + 2, 6)?;
                pos += 8;
                if n <= MAX_MEDIUM as u64 {
                    return Err(err(pos - 6, "non-canonical length prefix"));
                }
                n
            } else {
                let n = read_size(&byte_at, pos + 1, 3)?;
                pos += 4;
                if n <= MAX_SHORT as u64 {
                    return Err(err(pos - 3, "non-canonical length prefix"));
                }
                n
            }
        }
        small => {
            pos += 1;
            u64::from(small)
        }
    };
    let n = usize::try_from(n).map_err(|_| err(0, "vertex count does not fit in memory"))?;
    if n == 0 {
        return Err(err(pos.saturating_sub(1), "graph has no vertices"));
    }

    let bits = n * (n - 1) / 2;
    let body_len = bits.div_ceil(6);
    let available = text.len().saturating_sub(pos);
    if available < body_len {
        return Err(err(text.len(), format!("truncated body: expected {body_len} bytes, found {available}")));
    }
    if available > body_len {
        return Err(err(pos + body_len, "trailing bytes after graph body"));
    }

    let mut edges = Vec::new();
    let (mut i, mut j) = (0usize, 1usize);
    for k in 0..body_len {
        let byte = byte_at(pos + k)?;
        for shift in (0..6).rev() {
            let bit_index = k * 6 + (5 - shift);
            let bit = byte >> shift & 1;
            if bit_index >= bits {
                if bit != 0 {
                    return Err(err(pos + k, "nonzero padding bits"));
                }
                continue;
            }
            if bit == 1 {
                edges.push((i, j));
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Graph::from_edge_list(n, edges)
}

fn read_size(byte_at: &impl Fn(usize) -> Result<u8>, start: usize, count: usize) -> Result<u64> {
    (0..count).try_fold(0u64, |acc, k| Ok(acc << 6 | u64::from(byte_at(start + k)?)))
}

/// Decodes one graph per non-empty line.
pub fn decode_lines(text: &[u8]) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut start = 0;
    for line in text.split(|&b| b == b'\n') {
        let trimmed = line.strip_suffix(b"\r").unwrap_or(line);
        if !trimmed.is_empty() {
            graphs.push(decode(trimmed).map_err(|e| match e {
                Error::Graph6 { offset, reason } => Error::Graph6 { offset: start + offset, reason },
                other => other,
            })?);
        }
        start += line.len() + 1;
    }
    Ok(graphs)
}
