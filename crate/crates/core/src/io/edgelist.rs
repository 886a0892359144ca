//! `n m` header followed by `m` lines `u v` (0-indexed). Blank lines and
//! lines starting with `#` are ignored.

use std::fmt::Write;

use super::FormatError;
use crate::graph::Graph;

pub fn encode(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for e in g.edges() {
        writeln!(s, "{} {}", e.u, e.v).expect("writing to a String");
    }
    s
}

pub fn decode(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let fail = |line: usize, reason: &str| FormatError::EdgeList {
        line,
        reason: reason.to_string(),
    };
    let (hl, header) = lines.next().ok_or_else(|| fail(0, "missing `n m` header"))?;
    let [n, m] = pair(header).ok_or_else(|| fail(hl, "header must be `n m`"))?;
    let mut pairs = Vec::with_capacity(m);
    for (ln, l) in lines {
        let [u, v] = pair(l).ok_or_else(|| fail(ln, "expected `u v`"))?;
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(fail(hl, &format!("header promises {m} edges, found {}", pairs.len())));
    }
    Ok(Graph::new(n, pairs)?)
}

fn pair(line: &str) -> Option<[usize; 2]> {
    let mut it = line.split_whitespace().map(|t| t.parse::<usize>());
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Some([a, b]),
        _ => None,
    }
}
