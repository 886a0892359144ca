//! Duplicate-free enumeration of connected induced vertex sets.
//!
//! Every connected set is generated from its smallest vertex (the anchor) by
//! repeatedly adding a neighbour; a vertex passed over at some branch is
//! excluded from the whole subtree below that branch. This yields each set
//! exactly once and in a fixed order.

use std::ops::ControlFlow;

use super::{Graph, GraphError, VertexSet};

/// Lazy stream of the connected induced subsets of a graph whose order lies
/// in `min_size..=max_size`.
pub struct ConnectedSubsets<'g> {
    g: &'g Graph,
    min_size: usize,
    max_size: usize,
    next_anchor: usize,
    stack: Vec<Frame>,
}

struct Frame {
    x: VertexSet,
    excluded: VertexSet,
    pending: VertexSet,
    nbrs: VertexSet,
}

pub fn enumerate_connected_subsets(
    g: &Graph,
    min_size: usize,
    max_size: usize,
) -> Result<ConnectedSubsets<'_>, GraphError> {
    if min_size == 0 || min_size > max_size || max_size > g.order() {
        return Err(GraphError::BadRange {
            min: min_size,
            max: max_size,
            n: g.order(),
        });
    }
    Ok(ConnectedSubsets {
        g,
        min_size,
        max_size,
        next_anchor: 0,
        stack: Vec::new(),
    })
}

impl ConnectedSubsets<'_> {
    fn push(&mut self, x: VertexSet, excluded: VertexSet, nbrs: VertexSet) -> Option<VertexSet> {
        let pending = if x.len() < self.max_size {
            nbrs & !x & !excluded
        } else {
            VertexSet::EMPTY
        };
        self.stack.push(Frame {
            x,
            excluded,
            pending,
            nbrs,
        });
        (x.len() >= self.min_size).then_some(x)
    }
}

impl Iterator for ConnectedSubsets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            let Some(top) = self.stack.last_mut() else {
                let v = self.next_anchor;
                if v >= self.g.order() {
                    return None;
                }
                self.next_anchor += 1;
                let below = VertexSet::full(v);
                if let Some(x) = self.push(VertexSet::singleton(v), below, self.g.neighbors(v)) {
                    return Some(x);
                }
                continue;
            };
            let Some(w) = top.pending.first() else {
                self.stack.pop();
                continue;
            };
            top.pending.remove(w);
            let excluded = top.excluded;
            top.excluded.insert(w);
            let x = top.x.with(w);
            let nbrs = top.nbrs | self.g.neighbors(w);
            if let Some(x) = self.push(x, excluded, nbrs) {
                return Some(x);
            }
        }
    }
}

/// A node of the pruned search: the current set, the vertices barred from
/// joining it anywhere below this node, its boundary size, and the number of
/// boundary edges that run into barred vertices (a lower bound on the
/// boundary of every set in the subtree).
#[derive(Copy, Clone, Debug)]
pub(crate) struct SearchNode {
    pub x: VertexSet,
    pub excluded: VertexSet,
    pub boundary: usize,
    pub forced: usize,
}

pub(crate) enum Step {
    Descend,
    Prune,
    Abort,
}

/// Depth-first search over connected sets anchored at `anchor`, of order at
/// most `max_size`. `visit` sees every node once and controls descent.
pub(crate) fn search_anchored<F>(
    adj: &[VertexSet],
    anchor: usize,
    max_size: usize,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&SearchNode) -> Step,
{
    let excluded = VertexSet::full(anchor);
    let row = adj[anchor];
    let node = SearchNode {
        x: VertexSet::singleton(anchor),
        excluded,
        boundary: row.len(),
        forced: (row & excluded).len(),
    };
    dfs(adj, node, row, max_size, visit)
}

fn dfs<F>(
    adj: &[VertexSet],
    node: SearchNode,
    nbrs: VertexSet,
    max_size: usize,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&SearchNode) -> Step,
{
    match visit(&node) {
        Step::Abort => return ControlFlow::Break(()),
        Step::Prune => return ControlFlow::Continue(()),
        Step::Descend => {}
    }
    if node.x.len() >= max_size {
        return ControlFlow::Continue(());
    }
    let mut excluded = node.excluded;
    let mut forced = node.forced;
    let mut pending = nbrs & !node.x & !excluded;
    while let Some(w) = pending.first() {
        pending.remove(w);
        let row = adj[w];
        let inside = (row & node.x).len();
        let child = SearchNode {
            x: node.x.with(w),
            excluded,
            boundary: node.boundary + row.len() - 2 * inside,
            forced: forced + (row & excluded).len(),
        };
        dfs(adj, child, nbrs | row, max_size, visit)?;
        excluded.insert(w);
        forced += inside;
    }
    ControlFlow::Continue(())
}
