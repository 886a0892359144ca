//! Cheap sufficient test for "G − F is still super-λ^(h)".
//!
//! Let `D = ξ_h(G) + f_max`. Every bipartition `{X, X̄}` with both sides
//! connected in `G`, both of order at least `h + 2` and `d_G(X) <= D` is
//! stored once. For a fault set `F` with `|F| <= f_max`, any cut of `G − F`
//! whose sides are connected and of order at least `h + 2` then has size at
//! least
//!
//! ```text
//! LB(F) = min(D + 1 − |F|, min over stored X of d_G(X) − |F ∩ E_G(X)|).
//! ```
//!
//! If `G − F` is connected, some connected (h+1)-set attains `ξ_h(G − F)`
//! while leaving only components above `h`, and `LB(F) > ξ_h(G − F)`, then
//! `λ^(h)(G − F) = ξ_h(G − F)` and every minimum cut has a side of order
//! `h + 1`: the graph is super-λ^(h).

use std::ops::ControlFlow;

use crate::budget::{Budget, BudgetExceeded};
use crate::extraconn::search::{small_side_cut, xi_h_rows};
use crate::graph::enumerate::{search_anchored, SearchNode, Step};
use crate::graph::{reach, Edge, Graph, VertexSet};

pub(crate) struct FaultBound {
    h: usize,
    max_faults: usize,
    limit: usize,
    /// Stored bipartitions as `(d_G(X), X)`, by increasing boundary.
    sides: Vec<(usize, VertexSet)>,
}

pub(crate) enum Verdict {
    /// Super by the bound.
    Accepted,
    /// `G − F` is disconnected.
    Disconnected,
    /// The bound is inconclusive.
    Unknown,
}

impl FaultBound {
    pub fn new(g: &Graph, h: usize, max_faults: usize, budget: &Budget) -> Result<Self, BudgetExceeded> {
        let adj = g.rows();
        let n = adj.len();
        let limit = g.xi_h(h).unwrap_or(0) + max_faults;
        let all = g.vertices();
        let mut sides = Vec::new();
        let mut steps: u64 = 0;
        let mut timed_out = false;
        for a in 0..n {
            let flow = search_anchored(adj, a, n / 2, &mut |node: &SearchNode| {
                steps += 1;
                if steps & 0x3ff == 0 && budget.check().is_err() {
                    timed_out = true;
                    return Step::Abort;
                }
                if node.forced > limit {
                    return Step::Prune;
                }
                let size = node.x.len();
                if size >= h + 2
                    && n - size >= h + 2
                    && node.boundary <= limit
                    && (2 * size < n || node.x.contains(0))
                {
                    let rest = all & !node.x;
                    if reach(adj, rest.first().expect("proper subset"), rest) == rest {
                        sides.push((node.boundary, node.x));
                    }
                }
                Step::Descend
            });
            if timed_out || matches!(flow, ControlFlow::Break(())) {
                return Err(BudgetExceeded);
            }
        }
        sides.sort_by_key(|&(d, x)| (d, x.bits()));
        Ok(FaultBound {
            h,
            max_faults,
            limit,
            sides,
        })
    }

    pub fn stored(&self) -> usize {
        self.sides.len()
    }

    fn lower_bound(&self, faults: &[Edge]) -> usize {
        let k = faults.len();
        let mut lb = self.limit + 1 - k;
        for &(d, x) in &self.sides {
            if d - k.min(d) >= lb {
                break;
            }
            let crossing = faults.iter().filter(|e| e.crosses(x)).count();
            lb = lb.min(d - crossing);
        }
        lb
    }

    /// Tries to certify `G − F` super-λ^(h), given its adjacency rows.
    pub fn check(&self, rows: &[VertexSet], faults: &[Edge]) -> Verdict {
        debug_assert!(faults.len() <= self.max_faults);
        let n = rows.len();
        let all = VertexSet::full(n);
        if reach(rows, 0, all) != all {
            return Verdict::Disconnected;
        }
        let Some(xi) = xi_h_rows(rows, self.h) else {
            return Verdict::Unknown;
        };
        match small_side_cut(rows, self.h) {
            Some((d, _)) if d == xi && self.lower_bound(faults) > xi => Verdict::Accepted,
            _ => Verdict::Unknown,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extraconn::search::status;
    use crate::families;

    #[test]
    fn accepted_sets_are_super() {
        let g = families::petersen();
        let b = Budget::unlimited();
        let fb = FaultBound::new(&g, 1, 2, &b).unwrap();
        assert!(fb.stored() > 0);
        let edges = g.edges();
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let f = [edges[i], edges[j]];
                let rows = g.rows_without(&f);
                if let Verdict::Accepted = fb.check(&rows, &f) {
                    assert!(status(&rows, 1, false, &b).unwrap().is_super(), "{f:?}");
                }
            }
        }
    }

    #[test]
    fn stores_exactly_the_small_bipartitions() {
        let g = families::hypercube(4).unwrap();
        let fb = FaultBound::new(&g, 1, 3, &Budget::unlimited()).unwrap();
        let all = g.vertices();
        let mut expect = 0;
        for bits in 1u128..(1 << 16) {
            let x = VertexSet::from_bits(bits);
            let y = all & !x;
            if !x.contains(0) || x.len() < 3 || y.len() < 3 || g.boundary_size(x) > 9 {
                continue;
            }
            if g.is_connected_induced(x).unwrap() && g.is_connected_induced(y).unwrap() {
                expect += 1;
            }
        }
        // 96 paths on three vertices, 24 squares and 4 dimension halves, all
        // with boundary 8.
        assert_eq!(expect, 124);
        assert_eq!(fb.stored(), expect);
        assert!(fb.sides.iter().all(|&(d, _)| d == 8));
    }
}
