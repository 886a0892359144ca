//! Max-flow based connectivity and bipartite matching on cut edges.

use std::collections::VecDeque;

use super::{Graph, GraphError, VertexSet};

struct Arc {
    to: usize,
    cap: usize,
    rev: usize,
}

struct FlowNet {
    arcs: Vec<Vec<Arc>>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            arcs: (0..nodes).map(|_| Vec::new()).collect(),
        }
    }

    fn add(&mut self, a: usize, b: usize, cap: usize, back_cap: usize) {
        let ra = self.arcs[b].len();
        let rb = self.arcs[a].len();
        self.arcs[a].push(Arc { to: b, cap, rev: ra });
        self.arcs[b].push(Arc {
            to: a,
            cap: back_cap,
            rev: rb,
        });
    }

    /// Augments along shortest paths until `limit` units flow or no path is left.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let nodes = self.arcs.len();
        let mut flow = 0;
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; nodes];
        while flow < limit {
            prev.iter_mut().for_each(|p| *p = None);
            let mut queue = VecDeque::from([s]);
            let mut found = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for (i, a) in self.arcs[u].iter().enumerate() {
                    if a.cap > 0 && a.to != s && prev[a.to].is_none() {
                        prev[a.to] = Some((u, i));
                        if a.to == t {
                            found = true;
                            break 'bfs;
                        }
                        queue.push_back(a.to);
                    }
                }
            }
            if !found {
                break;
            }
            let mut v = t;
            while let Some((u, i)) = prev[v] {
                let rev = self.arcs[u][i].rev;
                self.arcs[u][i].cap -= 1;
                self.arcs[v][rev].cap += 1;
                v = u;
                if v == s {
                    break;
                }
            }
            flow += 1;
        }
        flow
    }
}

impl Graph {
    /// λ(G) via unit-capacity max-flow from vertex 0 to every other vertex.
    /// A disconnected graph has edge-connectivity 0.
    pub fn edge_connectivity(&self) -> usize {
        let n = self.order();
        if n < 2 {
            return 0;
        }
        let mut best = self.min_degree();
        for t in 1..n {
            if best == 0 {
                break;
            }
            let mut net = FlowNet::new(n);
            for e in self.edges() {
                net.add(e.u, e.v, 1, 1);
            }
            best = best.min(net.max_flow(0, t, best));
        }
        best
    }

    /// κ(G) via vertex-disjoint path counts between non-adjacent pairs;
    /// `n − 1` for complete graphs.
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.order();
        if n < 2 {
            return 0;
        }
        if !self.is_connected() {
            return 0;
        }
        let mut best = n - 1;
        // A minimum separator misses one of the first best+1 vertices, and
        // that vertex has a non-adjacent partner across the separator.
        let mut s = 0;
        while s <= best && s < n {
            for t in 0..n {
                if t == s || self.has_edge(s, t) {
                    continue;
                }
                let mut net = FlowNet::new(2 * n);
                for v in 0..n {
                    net.add(2 * v, 2 * v + 1, 1, 0);
                }
                for e in self.edges() {
                    net.add(2 * e.u + 1, 2 * e.v, n, 0);
                    net.add(2 * e.v + 1, 2 * e.u, n, 0);
                }
                best = best.min(net.max_flow(2 * s + 1, 2 * t, best));
            }
            s += 1;
        }
        best
    }

    /// Size of a maximum matching among the edges of `E_G(X)`.
    pub fn max_independent_boundary_edges(&self, x: VertexSet) -> Result<usize, GraphError> {
        let x = x & self.vertices();
        let y = !x & self.vertices();
        if x.is_empty() || y.is_empty() {
            return Err(GraphError::EmptySide);
        }
        let mut mate_of_y: Vec<Option<usize>> = vec![None; self.order()];
        let mut size = 0;
        for u in x.iter() {
            let mut seen = VertexSet::EMPTY;
            if self.augment(u, y, &mut seen, &mut mate_of_y) {
                size += 1;
            }
        }
        Ok(size)
    }

    fn augment(
        &self,
        u: usize,
        y: VertexSet,
        seen: &mut VertexSet,
        mate_of_y: &mut [Option<usize>],
    ) -> bool {
        for w in (self.neighbors(u) & y).iter() {
            if seen.contains(w) {
                continue;
            }
            seen.insert(w);
            let free = match mate_of_y[w] {
                None => true,
                Some(other) => self.augment(other, y, seen, mate_of_y),
            };
            if free {
                mate_of_y[w] = Some(u);
                return true;
            }
        }
        false
    }
}
