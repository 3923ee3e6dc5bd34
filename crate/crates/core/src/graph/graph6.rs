use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

fn parse_error(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes a short-form graph6 line (n <= 62).
pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(parse_error(0, "empty input"));
    };
    if first == b'~' {
        return Err(parse_error(0, "long-form graph6 (n > 62) is not supported"));
    }
    if !(63..=126).contains(&first) {
        return Err(parse_error(0, format!("invalid length byte 0x{first:02x}")));
    }
    let n = (first - 63) as usize;
    debug_assert!(n <= MAX_VERTICES);
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() != expected {
        let offset = bytes.len().min(expected);
        return Err(parse_error(
            offset,
            format!("expected {expected} bytes for n = {n}, found {}", bytes.len()),
        ));
    }

    let mut edges = Vec::new();
    let mut bit = 0;
    for (i, &c) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&c) {
            return Err(parse_error(i, format!("byte 0x{c:02x} outside the graph6 range")));
        }
        let chunk = c - 63;
        for k in (0..6).rev() {
            let set = chunk >> k & 1 == 1;
            if bit < nbits {
                if set {
                    edges.push(column_major_pair(bit));
                }
            } else if set {
                return Err(parse_error(i, "nonzero padding bits"));
            }
            bit += 1;
        }
    }
    Graph::new(n, edges)
}

/// Encodes `g` in short-form graph6.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { n, max: MAX_VERTICES });
    }
    let mut out = String::with_capacity(1 + n * n / 12 + 1);
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// The (i, j) pair addressed by bit `k` of the upper triangle, column-major.
fn column_major_pair(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}
