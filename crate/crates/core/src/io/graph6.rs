//! graph6: `N(n)` followed by the upper triangle of the adjacency matrix,
//! column by column, packed six bits per printable byte.

use super::FormatError;
use crate::graph::{Graph, MAX_VERTICES};

pub const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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

pub fn decode(line: &str) -> Result<Graph, FormatError> {
    let err = |m: &str| FormatError::Graph6(m.to_string());
    let line = line.trim();
    let body = line.strip_prefix(HEADER).unwrap_or(line).as_bytes();
    if body.iter().any(|b| !(63..=126).contains(b)) {
        return Err(err("byte outside 63..=126"));
    }
    let (n, rest) = match body {
        [] => return Err(err("empty string")),
        [126, 126, ..] => return Err(err("order too large")),
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(err("truncated order")),
        [x, rest @ ..] => (*x as usize - 63, rest),
    };
    if n > MAX_VERTICES {
        return Err(err(&format!("order {n} exceeds {MAX_VERTICES}")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return Err(err(&format!(
            "expected {} data bytes for order {n}, found {}",
            bits.div_ceil(6),
            rest.len()
        )));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    if n == 0 {
        return Err(err("order 0"));
    }
    Ok(Graph::new(n, pairs)?)
}
