//! Compact immutable simple graphs over at most 128 vertices.
//!
//! Vertex sets are single `u128` bit rows, so every set operation used by the
//! searches (union, mask, popcount) is a handful of machine instructions.

pub(crate) mod enumerate;
mod flow;
mod measures;
mod vertex_set;

pub use enumerate::{enumerate_connected_subsets, ConnectedSubsets};
pub use vertex_set::VertexSet;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported order.
pub const MAX_VERTICES: usize = 128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("vertex set must be a nonempty proper subset of the vertices")]
    EmptySide,
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph has no edges")]
    NoEdges,
    #[error("bad size range {min}..={max} for order {n}")]
    BadRange { min: usize, max: usize, n: usize },
}

/// An undirected edge stored canonically with `u < v`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", from = "[usize; 2]")]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds the canonical form of the pair. Loops are allowed here and
    /// rejected by [`Graph::new`].
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    /// True when exactly one endpoint lies in `x`.
    #[inline]
    pub fn crosses(&self, x: VertexSet) -> bool {
        x.contains(self.u) != x.contains(self.v)
    }

    pub fn is_incident(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl From<[usize; 2]> for Edge {
    fn from(p: [usize; 2]) -> Self {
        Edge::new(p[0], p[1])
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A duplicate-free set of edges kept in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(Vec<Edge>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(Vec::new())
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(edges: I) -> Self {
        let mut v: Vec<Edge> = edges.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        EdgeSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.0.binary_search(e).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Edge> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.0
    }

    /// Vertices covered by the edges.
    pub fn endpoints(&self) -> VertexSet {
        self.0
            .iter()
            .fold(VertexSet::EMPTY, |acc, e| acc.with(e.u).with(e.v))
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = &'a Edge;
    type IntoIter = std::slice::Iter<'a, Edge>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        EdgeSet::from_edges(iter)
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges=[", self.n, self.edges.len())?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, repeated pairs and
    /// out-of-range endpoints.
    pub fn new<I>(n: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut edges = Vec::new();
        for (a, b) in pairs {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            if adj[a].contains(b) {
                let e = Edge::new(a, b);
                return Err(GraphError::DuplicateEdge(e.u, e.v));
            }
            adj[a].insert(b);
            adj[b].insert(a);
            edges.push(Edge::new(a, b));
        }
        edges.sort_unstable();
        Ok(Graph { n, edges, adj })
    }

    fn from_rows(adj: Vec<VertexSet>) -> Self {
        let n = adj.len();
        let mut edges = Vec::new();
        for (u, row) in adj.iter().enumerate() {
            for v in row.iter().filter(|&v| v > u) {
                edges.push(Edge { u, v });
            }
        }
        Graph { n, edges, adj }
    }

    /// The graph with no edges on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Graph::new(n, std::iter::empty())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Canonically ordered edge list.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|r| r.len()).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.min_degree();
        (self.max_degree() == d).then_some(d)
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a].contains(b)
    }

    pub fn edge_index(&self, e: &Edge) -> Option<usize> {
        self.edges.binary_search(e).ok()
    }

    /// G − F. Pairs of `f` that are not edges are ignored.
    pub fn without_edges<'a, I>(&self, f: I) -> Graph
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut adj = self.adj.clone();
        for e in f {
            adj[e.u].remove(e.v);
            adj[e.v].remove(e.u);
        }
        Graph::from_rows(adj)
    }

    /// Adjacency rows with the given edges removed, without building a full
    /// graph. Used on the hot path of fault searches.
    pub(crate) fn rows_without(&self, f: &[Edge]) -> Vec<VertexSet> {
        let mut adj = self.adj.clone();
        for e in f {
            adj[e.u].remove(e.v);
            adj[e.v].remove(e.u);
        }
        adj
    }

    pub(crate) fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let pairs: Vec<(usize, usize)> =
            self.edges.iter().map(|e| (perm[e.u], perm[e.v])).collect();
        Graph::new(self.n, pairs).expect("relabeling a valid graph by a permutation")
    }

    /// Disjoint union with `other`, whose vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let shift = self.n;
        let pairs = self
            .edges
            .iter()
            .map(|e| (e.u, e.v))
            .chain(other.edges.iter().map(|e| (e.u + shift, e.v + shift)));
        Graph::new(self.n + other.n, pairs)
    }

    /// `E_G(X)`: the edges with exactly one endpoint in `x`.
    pub fn boundary(&self, x: VertexSet) -> Result<EdgeSet, GraphError> {
        self.check_proper(x)?;
        Ok(EdgeSet(
            self.edges.iter().copied().filter(|e| e.crosses(x)).collect(),
        ))
    }

    /// `d_G(X)` for any `x` (0 for the empty or full set).
    pub fn boundary_size(&self, x: VertexSet) -> usize {
        let outside = !x & self.vertices();
        x.iter().map(|v| (self.adj[v] & outside).len()).sum()
    }

    fn check_proper(&self, x: VertexSet) -> Result<(), GraphError> {
        let x = x & self.vertices();
        if x.is_empty() || x == self.vertices() {
            Err(GraphError::EmptySide)
        } else {
            Ok(())
        }
    }

    /// Whether `G[x]` is connected.
    pub fn is_connected_induced(&self, x: VertexSet) -> Result<bool, GraphError> {
        let x = x & self.vertices();
        match x.first() {
            None => Err(GraphError::EmptySide),
            Some(v) => Ok(reach(&self.adj, v, x) == x),
        }
    }

    pub fn is_connected(&self) -> bool {
        reach(&self.adj, 0, self.vertices()) == self.vertices()
    }

    /// Components of `G[x]`, ordered by smallest vertex.
    pub fn components_within(&self, x: VertexSet) -> Vec<VertexSet> {
        components(&self.adj, x & self.vertices())
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Edge-degree `d(u) + d(v) − 2` of an edge.
    pub fn edge_degree(&self, e: Edge) -> Result<usize, GraphError> {
        if !self.has_edge(e.u, e.v) {
            return Err(GraphError::NotAnEdge(e.u, e.v));
        }
        Ok(self.degree(e.u) + self.degree(e.v) - 2)
    }

    /// Minimum edge-degree ξ(G).
    pub fn xi(&self) -> Result<usize, GraphError> {
        self.edges
            .iter()
            .map(|e| self.degree(e.u) + self.degree(e.v) - 2)
            .min()
            .ok_or(GraphError::NoEdges)
    }

    /// Number of edges whose edge-degree equals ξ(G).
    pub fn eta(&self) -> Result<usize, GraphError> {
        let xi = self.xi()?;
        Ok(self
            .edges
            .iter()
            .filter(|e| self.degree(e.u) + self.degree(e.v) - 2 == xi)
            .count())
    }

    pub fn is_edge_regular(&self) -> Result<bool, GraphError> {
        Ok(self.eta()? == self.size())
    }

    /// ξ_h(G): the minimum boundary over connected vertex sets of order h+1,
    /// or `None` when no such set exists.
    pub fn xi_h(&self, h: usize) -> Option<usize> {
        if h + 1 > self.n {
            return None;
        }
        if h == 0 {
            return Some(self.min_degree());
        }
        enumerate_connected_subsets(self, h + 1, h + 1)
            .ok()?
            .map(|x| self.boundary_size(x))
            .min()
    }

    /// True when no vertex pair has two common neighbours, i.e. no 4-cycle.
    pub fn is_c4_free(&self) -> bool {
        (0..self.n).all(|u| {
            (u + 1..self.n).all(|v| (self.adj[u] & self.adj[v]).len() <= 1)
        })
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges
            .iter()
            .all(|e| (self.adj[e.u] & self.adj[e.v]).is_empty())
    }
}

/// Vertices reachable from `v` inside `within`.
pub(crate) fn reach(adj: &[VertexSet], v: usize, within: VertexSet) -> VertexSet {
    let mut seen = VertexSet::singleton(v);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for u in frontier.iter() {
            next |= adj[u];
        }
        next = next & within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

pub(crate) fn components(adj: &[VertexSet], within: VertexSet) -> Vec<VertexSet> {
    let mut left = within;
    let mut out = Vec::new();
    while let Some(v) = left.first() {
        let c = reach(adj, v, left);
        left &= !c;
        out.push(c);
    }
    out
}

/// Fragment certificate: a vertex set together with its boundary and the
/// component profile of the other side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fragment {
    pub x: VertexSet,
    pub boundary: EdgeSet,
    pub boundary_size: usize,
    pub comp_sizes_complement: Vec<usize>,
}

impl Fragment {
    pub fn new(g: &Graph, x: VertexSet) -> Result<Self, GraphError> {
        let boundary = g.boundary(x)?;
        let comp_sizes_complement = g
            .components_within(!x & g.vertices())
            .iter()
            .map(|c| c.len())
            .collect();
        Ok(Fragment {
            x,
            boundary_size: boundary.len(),
            boundary,
            comp_sizes_complement,
        })
    }

    pub fn order(&self) -> usize {
        self.x.len()
    }

    /// Order of the other side.
    pub fn complement_order(&self) -> usize {
        self.comp_sizes_complement.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn cycle6() -> Graph {
        Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::from_iter(vs.iter().copied())
    }

    #[test]
    fn build_k4() {
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 6);
        assert_eq!(g.regular_degree(), Some(3));
    }

    #[test]
    fn build_rejections() {
        assert_eq!(
            Graph::new(3, [(0, 1), (0, 1)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::new(2, [(0, 0)]), Err(GraphError::LoopEdge(0)));
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::empty(129), Err(GraphError::TooLarge(129)));
        assert_eq!(Graph::empty(0), Err(GraphError::NoVertices));
        assert!(Graph::empty(128).is_ok());
    }

    #[test]
    fn boundary_examples() {
        let k4 = families::complete(4).unwrap();
        assert_eq!(k4.boundary(set(&[0])).unwrap().len(), 3);

        let c6 = cycle6();
        let b = c6.boundary(set(&[0, 1, 2])).unwrap();
        assert_eq!(b.as_slice(), &[Edge::new(0, 5), Edge::new(2, 3)]);

        // The first-coordinate split of Q4 is cut by exactly the 8 edges of
        // that dimension.
        let q4 = families::hypercube(4).unwrap();
        let x = VertexSet::from_iter((0..16).filter(|v| v & 8 == 0));
        let dim_edges = q4.edges().iter().filter(|e| e.u ^ e.v == 8).count();
        assert_eq!(dim_edges, 8);
        assert_eq!(q4.boundary(x).unwrap().len(), dim_edges);

        assert_eq!(c6.boundary(VertexSet::EMPTY), Err(GraphError::EmptySide));
        assert_eq!(c6.boundary(c6.vertices()), Err(GraphError::EmptySide));
    }

    #[test]
    fn connectivity_of_induced_sets() {
        let c6 = cycle6();
        assert!(c6.is_connected_induced(set(&[0, 1, 2])).unwrap());
        assert!(!c6.is_connected_induced(set(&[0, 2, 4])).unwrap());
        let p = families::petersen();
        for v in 0..10 {
            assert!(p.is_connected_induced(VertexSet::singleton(v)).unwrap());
        }
        assert_eq!(
            c6.is_connected_induced(VertexSet::EMPTY),
            Err(GraphError::EmptySide)
        );
    }

    #[test]
    fn components_examples() {
        let c6 = cycle6();
        assert_eq!(
            c6.components_within(set(&[0, 2, 4])),
            vec![set(&[0]), set(&[2]), set(&[4])]
        );
        assert_eq!(
            c6.components_within(set(&[0, 1, 3, 4])),
            vec![set(&[0, 1]), set(&[3, 4])]
        );
        let k4 = families::complete(4).unwrap();
        assert_eq!(k4.components(), vec![k4.vertices()]);
        assert!(k4.components_within(VertexSet::EMPTY).is_empty());
    }

    #[test]
    fn edge_degrees() {
        let k4 = families::complete(4).unwrap();
        assert_eq!(k4.edge_degree(Edge::new(0, 1)), Ok(4));
        let p = families::petersen();
        for e in p.edges() {
            assert_eq!(p.edge_degree(*e), Ok(4));
        }
        let c6 = cycle6();
        assert_eq!(c6.edge_degree(Edge::new(0, 3)), Err(GraphError::NotAnEdge(0, 3)));
        assert_eq!(Graph::empty(3).unwrap().xi(), Err(GraphError::NoEdges));
    }

    #[test]
    fn xi_eta_regular() {
        for g in [
            families::complete(5).unwrap(),
            families::petersen(),
            families::hypercube(4).unwrap(),
        ] {
            let k = g.regular_degree().unwrap();
            assert_eq!(g.xi().unwrap(), 2 * k - 2);
            assert!(g.is_edge_regular().unwrap());
        }
        let r25 = families::remark25_graph();
        assert_eq!(r25.xi().unwrap(), 2);
        assert_eq!(r25.eta().unwrap(), 1);
        // The unique minimum edge is i-j.
        assert_eq!(r25.edge_degree(Edge::new(8, 9)), Ok(2));
        let r27 = families::remark27_graph(2).unwrap();
        assert_eq!(r27.xi().unwrap(), 2);
        assert_eq!(r27.eta().unwrap(), 2);
    }

    #[test]
    fn xi_h_examples() {
        let q4 = families::hypercube(4).unwrap();
        assert_eq!(q4.xi_h(2), Some(8));
        assert_eq!(q4.xi_h(1), Some(6));
        assert_eq!(q4.xi_h(0), Some(4));
        // Every 3-subset of K4 has boundary 3 (brute force over all subsets).
        let k4 = families::complete(4).unwrap();
        let brute = (0u32..16)
            .filter(|m| m.count_ones() == 3)
            .map(|m| k4.boundary_size(VertexSet::from_bits(m as u128)))
            .min();
        assert_eq!(brute, Some(3));
        assert_eq!(k4.xi_h(2), Some(3));
        assert_eq!(k4.xi_h(4), None);
        // Disconnected pieces: no connected 3-set in a perfect matching.
        let m = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(m.xi_h(2), None);
    }

    #[test]
    fn c4_and_triangle_freeness() {
        assert!(families::petersen().is_c4_free());
        assert!(!families::hypercube(3).unwrap().is_c4_free());
        assert!(families::hypercube(3).unwrap().is_triangle_free());
        assert!(!families::complete(3).unwrap().is_triangle_free());
    }

    #[test]
    fn fragment_profile() {
        let c6 = cycle6();
        let f = Fragment::new(&c6, set(&[0, 3])).unwrap();
        assert_eq!(f.boundary_size, 4);
        assert_eq!(f.comp_sizes_complement, vec![2, 2]);
        assert_eq!(f.complement_order(), 4);
    }

    #[test]
    fn removing_edges() {
        let k4 = families::complete(4).unwrap();
        let g = k4.without_edges(&[Edge::new(0, 1), Edge::new(2, 3)]);
        assert_eq!(g.size(), 4);
        assert!(!g.has_edge(1, 0));
        assert_eq!(g.regular_degree(), Some(2));
    }
}
