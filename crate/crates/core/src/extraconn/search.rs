//! Branch-and-bound over connected vertex sets, working directly on
//! adjacency rows so that faulted graphs need no rebuilding.
//!
//! A minimum h-extra cut is always `E(X)` for a partition `{X, X̄}` with both
//! sides connected and of order at least `h + 1` (any component `C` of
//! `G − F` gives an h-extra cut `E(C) ⊆ F`). So it suffices to scan
//! connected `X` with `h + 1 <= |X| <= n/2` and test `X̄` for connectivity;
//! for `|X| = n/2` only the side containing vertex 0 is counted.

use std::cmp::Ordering as CmpOrdering;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::budget::{Budget, BudgetExceeded};
use crate::graph::enumerate::{search_anchored, SearchNode, Step};
use crate::graph::{reach, VertexSet};

/// Outcome of a minimum h-extra cut search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct CutSearch {
    pub value: usize,
    /// Lexicographically smallest minimizing side (the smaller side of its
    /// partition, or the one holding vertex 0 on a tie).
    pub witness: VertexSet,
    /// Number of distinct minimum cuts.
    pub minimizers: usize,
    /// Smallest minimizing side when some minimum cut leaves both sides with
    /// more than `h + 1` vertices.
    pub violator: Option<VertexSet>,
}

#[derive(Clone, Debug)]
struct Tally {
    best: usize,
    witness: Option<VertexSet>,
    count: usize,
    violator: Option<VertexSet>,
}

fn lex_min(a: Option<VertexSet>, b: Option<VertexSet>) -> Option<VertexSet> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if x.lex_cmp(y) == CmpOrdering::Greater { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

impl Tally {
    fn empty() -> Self {
        Tally {
            best: usize::MAX,
            witness: None,
            count: 0,
            violator: None,
        }
    }

    fn offer(&mut self, x: VertexSet, d: usize, violating: bool) {
        let v = violating.then_some(x);
        match d.cmp(&self.best) {
            CmpOrdering::Less => {
                *self = Tally {
                    best: d,
                    witness: Some(x),
                    count: 1,
                    violator: v,
                }
            }
            CmpOrdering::Equal => {
                self.count += 1;
                self.witness = lex_min(self.witness, Some(x));
                self.violator = lex_min(self.violator, v);
            }
            CmpOrdering::Greater => {}
        }
    }

    fn merge(self, other: Tally) -> Tally {
        match self.best.cmp(&other.best) {
            CmpOrdering::Less => self,
            CmpOrdering::Greater => other,
            CmpOrdering::Equal => Tally {
                best: self.best,
                witness: lex_min(self.witness, other.witness),
                count: self.count + other.count,
                violator: lex_min(self.violator, other.violator),
            },
        }
    }
}

/// How often (in search nodes) the budget is polled.
const POLL_MASK: u64 = 0x3ff;

/// ξ_h on adjacency rows; `None` when no connected (h+1)-set exists.
pub(crate) fn xi_h_rows(adj: &[VertexSet], h: usize) -> Option<usize> {
    let n = adj.len();
    if h + 1 > n {
        return None;
    }
    let mut best: Option<usize> = None;
    for a in 0..n {
        let _ = search_anchored(adj, a, h + 1, &mut |node: &SearchNode| {
            if node.x.len() == h + 1 {
                best = Some(best.map_or(node.boundary, |b| b.min(node.boundary)));
            }
            Step::Descend
        });
    }
    best
}

/// The least boundary among connected (h+1)-sets whose removal leaves only
/// components of order above `h`: the value of an actual h-extra cut.
pub(crate) fn small_side_cut(adj: &[VertexSet], h: usize) -> Option<(usize, VertexSet)> {
    let n = adj.len();
    if 2 * (h + 1) > n {
        return None;
    }
    let all = VertexSet::full(n);
    let mut best: Option<(usize, VertexSet)> = None;
    for a in 0..n {
        let _ = search_anchored(adj, a, h + 1, &mut |node: &SearchNode| {
            if node.x.len() == h + 1 && best.is_none_or(|(b, _)| node.boundary < b) {
                let rest = all & !node.x;
                if crate::graph::components(adj, rest).iter().all(|c| c.len() > h) {
                    best = Some((node.boundary, node.x));
                }
            }
            Step::Descend
        });
    }
    best
}

fn search_from(
    adj: &[VertexSet],
    anchor: usize,
    h: usize,
    shared: &AtomicUsize,
    budget: &Budget,
) -> Result<Tally, BudgetExceeded> {
    let n = adj.len();
    let all = VertexSet::full(n);
    let mut tally = Tally::empty();
    let mut steps: u64 = 0;
    let mut timed_out = false;
    let flow = search_anchored(adj, anchor, n / 2, &mut |node: &SearchNode| {
        steps += 1;
        if steps & POLL_MASK == 0 && budget.check().is_err() {
            timed_out = true;
            return Step::Abort;
        }
        let bound = shared.load(Ordering::Relaxed);
        if node.forced > bound {
            return Step::Prune;
        }
        let size = node.x.len();
        let d = node.boundary;
        if size > h && d <= bound && d <= tally.best && (2 * size < n || node.x.contains(0)) {
            let rest = all & !node.x;
            let start = rest.first().expect("proper subset");
            if reach(adj, start, rest) == rest {
                tally.offer(node.x, d, size > h + 1 && n - size > h + 1);
                shared.fetch_min(d, Ordering::Relaxed);
            }
        }
        Step::Descend
    });
    if timed_out || matches!(flow, ControlFlow::Break(())) {
        return Err(BudgetExceeded);
    }
    Ok(tally)
}

/// Exact minimum h-extra cut of a connected graph given by its rows.
/// `Ok(None)` means the graph has no h-extra cut.
pub(crate) fn min_extra_cut(
    adj: &[VertexSet],
    h: usize,
    parallel: bool,
    budget: &Budget,
) -> Result<Option<CutSearch>, BudgetExceeded> {
    let n = adj.len();
    if n < 2 * (h + 1) {
        return Ok(None);
    }
    let seed = small_side_cut(adj, h).map_or(usize::MAX, |(d, _)| d);
    let shared = AtomicUsize::new(seed);
    let tally = if parallel {
        (0..n)
            .into_par_iter()
            .map(|a| search_from(adj, a, h, &shared, budget))
            .try_reduce(Tally::empty, |a, b| Ok(a.merge(b)))?
    } else {
        let mut t = Tally::empty();
        for a in 0..n {
            t = t.merge(search_from(adj, a, h, &shared, budget)?);
        }
        t
    };
    Ok(tally.witness.map(|witness| CutSearch {
        value: tally.best,
        witness,
        minimizers: tally.count,
        violator: tally.violator,
    }))
}

/// Super-λ^(h) status of the graph given by its rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Status {
    Disconnected,
    NoExtraCut,
    NotOptimal { lambda: usize, xi: usize, witness: VertexSet },
    NotSuper { lambda: usize, violator: VertexSet },
    Super { lambda: usize },
}

impl Status {
    pub fn is_super(&self) -> bool {
        matches!(self, Status::Super { .. })
    }
}

pub(crate) fn status(
    adj: &[VertexSet],
    h: usize,
    parallel: bool,
    budget: &Budget,
) -> Result<Status, BudgetExceeded> {
    let n = adj.len();
    let all = VertexSet::full(n);
    if reach(adj, 0, all) != all {
        return Ok(Status::Disconnected);
    }
    let Some(cut) = min_extra_cut(adj, h, parallel, budget)? else {
        return Ok(Status::NoExtraCut);
    };
    let xi = xi_h_rows(adj, h).expect("an h-extra cut implies a connected (h+1)-set");
    Ok(if cut.value != xi {
        Status::NotOptimal {
            lambda: cut.value,
            xi,
            witness: cut.witness,
        }
    } else if let Some(v) = cut.violator {
        Status::NotSuper {
            lambda: cut.value,
            violator: v,
        }
    } else {
        Status::Super { lambda: cut.value }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Graph;

    /// Minimum boundary over all bipartitions with both sides connected and
    /// of order above h, by plain bitmask enumeration.
    fn brute(g: &Graph, h: usize) -> Option<(usize, usize)> {
        let n = g.order();
        let all = g.vertices();
        let mut best: Option<(usize, usize)> = None;
        for bits in 1u128..(1u128 << n) - 1 {
            let x = VertexSet::from_bits(bits);
            if !x.contains(0) {
                continue;
            }
            let y = all & !x;
            if x.len() <= h || y.len() <= h {
                continue;
            }
            if !g.is_connected_induced(x).unwrap() || !g.is_connected_induced(y).unwrap() {
                continue;
            }
            let d = g.boundary_size(x);
            best = match best {
                Some((b, _)) if d > b => best,
                Some((b, c)) if d == b => Some((b, c + 1)),
                _ => Some((d, 1)),
            };
        }
        best
    }

    #[test]
    fn matches_bitmask_scan() {
        let graphs = [
            families::petersen(),
            families::hypercube(4).unwrap(),
            families::remark25_graph(),
            families::cycle(8).unwrap(),
            families::cycle(7).unwrap(),
            families::complete(6).unwrap(),
            families::complete_bipartite(3, 4).unwrap(),
            families::remark27_graph(2).unwrap(),
        ];
        for g in &graphs {
            for h in 0..=3 {
                for parallel in [false, true] {
                    let got = min_extra_cut(g.rows(), h, parallel, &Budget::unlimited())
                        .unwrap()
                        .map(|c| (c.value, c.minimizers));
                    assert_eq!(got, brute(g, h), "{g:?} h={h}");
                }
            }
        }
    }

    #[test]
    fn witness_is_smallest_minimizer() {
        let c8 = families::cycle(8).unwrap();
        let cut = min_extra_cut(c8.rows(), 1, true, &Budget::unlimited()).unwrap().unwrap();
        assert_eq!(cut.value, 2);
        assert_eq!(cut.witness.to_vec(), vec![0, 1]);
        // {0,1,2} against the rest: both sides exceed 2 vertices.
        assert_eq!(cut.violator.unwrap().to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn statuses() {
        let b = Budget::unlimited();
        let q4 = families::hypercube(4).unwrap();
        assert_eq!(status(q4.rows(), 1, false, &b).unwrap(), Status::Super { lambda: 6 });
        assert!(matches!(
            status(q4.rows(), 2, false, &b).unwrap(),
            Status::NotSuper { lambda: 8, .. }
        ));
        let star = families::star_composite(3, 2).unwrap();
        assert_eq!(status(star.rows(), 2, false, &b).unwrap(), Status::NoExtraCut);
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(status(split.rows(), 0, false, &b).unwrap(), Status::Disconnected);
        // Two triangles joined by an edge: λ' = 1 < ξ = 2.
        let bar = Graph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(matches!(
            status(bar.rows(), 1, false, &b).unwrap(),
            Status::NotOptimal { lambda: 1, xi: 2, .. }
        ));
    }

    #[test]
    fn zero_budget_aborts_large_searches() {
        let q5 = families::hypercube(5).unwrap();
        let b = Budget::within(std::time::Duration::ZERO);
        assert_eq!(min_extra_cut(q5.rows(), 2, false, &b), Err(BudgetExceeded));
    }
}
