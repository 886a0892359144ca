//! Reference implementations of λ^(h) that follow the definition directly.
//! They share no code with the fragment search and exist to test it.

use super::ExtraConnError;
use crate::graph::{Graph, VertexSet};

/// Smallest `|F|` over edge sets `F` such that `G − F` is disconnected with
/// every component of order above `h`, scanning subsets by increasing size.
/// At most `budget` subsets are examined.
pub fn lambda_h_oracle(g: &Graph, h: usize, budget: u64) -> Result<Option<usize>, ExtraConnError> {
    if !g.is_connected() {
        return Err(ExtraConnError::disconnected(g));
    }
    let edges = g.edges();
    let m = edges.len();
    let mut examined: u64 = 0;
    for k in 1..=m {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            examined += 1;
            if examined > budget {
                return Err(ExtraConnError::OracleBudgetExceeded(budget));
            }
            let f: Vec<_> = idx.iter().map(|&i| edges[i]).collect();
            let rest = g.without_edges(&f);
            let comps = rest.components();
            if comps.len() > 1 && comps.iter().all(|c| c.len() > h) {
                return Ok(Some(k));
            }
            if !next_combination(&mut idx, m) {
                break;
            }
        }
    }
    Ok(None)
}

/// Advances `idx` to the next k-combination of `0..m` in lexicographic order.
pub(crate) fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < m - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Largest order accepted by [`lambda_h_partition_oracle`].
pub const PARTITION_ORACLE_MAX: usize = 11;

/// λ^(h) as the least number of edges running between the blocks of a
/// partition of `V` into at least two blocks, each inducing a connected
/// subgraph of order above `h`. Removing exactly those edges realises the
/// partition as the components of `G − F`, and every h-extra cut contains
/// the edges between the components it leaves, so the two minima agree.
pub fn lambda_h_partition_oracle(g: &Graph, h: usize) -> Result<Option<usize>, ExtraConnError> {
    if !g.is_connected() {
        return Err(ExtraConnError::disconnected(g));
    }
    let n = g.order();
    if n > PARTITION_ORACLE_MAX {
        return Err(ExtraConnError::OracleTooLarge(n));
    }
    let mut block = vec![0usize; n];
    let mut best = None;
    partitions(g, h, 1, 1, &mut block, &mut best);
    Ok(best)
}

/// Restricted growth strings: `block[v] <= 1 + max(block[..v])`.
fn partitions(
    g: &Graph,
    h: usize,
    v: usize,
    used: usize,
    block: &mut Vec<usize>,
    best: &mut Option<usize>,
) {
    let n = g.order();
    if v == n {
        if used < 2 {
            return;
        }
        let mut parts = vec![VertexSet::EMPTY; used];
        for (u, &b) in block.iter().enumerate() {
            parts[b].insert(u);
        }
        let ok = parts
            .iter()
            .all(|&p| p.len() > h && g.is_connected_induced(p).unwrap_or(false));
        if ok {
            let cross = g.edges().iter().filter(|e| block[e.u] != block[e.v]).count();
            *best = Some(best.map_or(cross, |b: usize| b.min(cross)));
        }
        return;
    }
    for b in 0..=used.min(n - 1) {
        block[v] = b;
        partitions(g, h, v + 1, used.max(b + 1), block, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn small_examples() {
        let c6 = families::cycle(6).unwrap();
        assert_eq!(lambda_h_oracle(&c6, 1, 1 << 20).unwrap(), Some(2));
        let k4 = families::complete(4).unwrap();
        assert_eq!(lambda_h_oracle(&k4, 1, 1 << 20).unwrap(), Some(4));
        assert_eq!(lambda_h_oracle(&k4, 0, 1 << 20).unwrap(), Some(3));
        assert_eq!(lambda_h_oracle(&k4, 2, 1 << 20).unwrap(), None);
        for h in 0..3 {
            assert_eq!(
                lambda_h_partition_oracle(&c6, h).unwrap(),
                lambda_h_oracle(&c6, h, 1 << 20).unwrap()
            );
        }
    }

    #[test]
    fn budget_is_enforced() {
        let k4 = families::complete(4).unwrap();
        assert_eq!(
            lambda_h_oracle(&k4, 1, 10),
            Err(ExtraConnError::OracleBudgetExceeded(10))
        );
    }

    #[test]
    fn combinations_in_order() {
        let mut idx = vec![0, 1];
        let mut seen = vec![idx.clone()];
        while next_combination(&mut idx, 4) {
            seen.push(idx.clone());
        }
        assert_eq!(
            seen,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
    }

    #[test]
    fn partition_oracle_rejects_large_graphs() {
        let q4 = families::hypercube(4).unwrap();
        assert_eq!(
            lambda_h_partition_oracle(&q4, 1),
            Err(ExtraConnError::OracleTooLarge(16))
        );
    }
}
