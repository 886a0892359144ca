//! Deterministic generators for the graph families and hand-built examples
//! used throughout the toolkit.

mod spec;

pub use spec::{FamilySpec, MatchingRule, SpecParseError};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{EdgeSet, Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error("resulting order {0} exceeds {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("parts have different orders ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("not a perfect matching: {0}")]
    NotAMatching(String),
    #[error("a ring composition needs at least 3 parts, got {0}")]
    TooFewParts(usize),
    #[error("no {k}-regular graph on {n} vertices")]
    Infeasible { n: usize, k: usize },
    #[error("no simple connected {k}-regular graph on {n} vertices after {tries} attempts")]
    RetriesExhausted { n: usize, k: usize, tries: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn bad(msg: impl Into<String>) -> FamilyError {
    FamilyError::BadParam(msg.into())
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(bad("complete graph needs n >= 1"));
    }
    check_order(n)?;
    Ok(Graph::new(
        n,
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))),
    )?)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, FamilyError> {
    if a == 0 || b == 0 {
        return Err(bad("complete bipartite graph needs a, b >= 1"));
    }
    check_order(a + b)?;
    Ok(Graph::new(
        a + b,
        (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))),
    )?)
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(bad("cycle needs n >= 3"));
    }
    check_order(n)?;
    Ok(Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))?)
}

/// Outer 5-cycle on `0..5`, inner pentagram on `5..10`, spokes `i – i+5`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::new(10, outer.chain(inner).chain(spokes)).expect("Petersen graph")
}

/// `Q_n`: vertex ids are the n-bit strings read as integers (most significant
/// bit first), adjacent at Hamming distance one.
pub fn hypercube(n: usize) -> Result<Graph, FamilyError> {
    if !(1..=7).contains(&n) {
        return Err(bad("hypercube dimension must be in 1..=7"));
    }
    let order = 1usize << n;
    Ok(Graph::new(
        order,
        (0..order).flat_map(|v| {
            (0..n)
                .map(move |b| (v, v ^ (1 << b)))
                .filter(|&(a, b)| a < b)
        }),
    )?)
}

/// `G*_{n,h}`: n disjoint copies of `K_h` (vertices `0..n*h`) plus a hub
/// (vertex `n*h`) adjacent to all of them. Any `n, h >= 1` is accepted.
pub fn star_composite(n: usize, h: usize) -> Result<Graph, FamilyError> {
    if h == 0 || n == 0 {
        return Err(bad("star composite needs n, h >= 1"));
    }
    let hub = n * h;
    check_order(hub + 1)?;
    let mut pairs = Vec::new();
    for c in 0..n {
        let base = c * h;
        for i in 0..h {
            pairs.push((base + i, hub));
            for j in i + 1..h {
                pairs.push((base + i, base + j));
            }
        }
    }
    Ok(Graph::new(hub + 1, pairs)?)
}

/// The ten-vertex example with a unique minimum edge `i – j`.
/// Vertices `a..j` are numbered `0..9`.
pub fn remark25_graph() -> Graph {
    const EDGES: &[(char, char)] = &[
        ('a', 'b'),
        ('c', 'd'),
        ('e', 'f'),
        ('g', 'h'),
        ('i', 'j'),
        ('a', 'c'),
        ('a', 'd'),
        ('a', 'g'),
        ('b', 'c'),
        ('b', 'd'),
        ('b', 'h'),
        ('c', 'e'),
        ('d', 'f'),
        ('g', 'e'),
        ('g', 'f'),
        ('g', 'i'),
        ('h', 'e'),
        ('h', 'f'),
        ('h', 'j'),
    ];
    let id = |c: char| c as usize - 'a' as usize;
    Graph::new(10, EDGES.iter().map(|&(p, q)| (id(p), id(q)))).expect("remark25 graph")
}

/// Two cliques `X` (`0..s`) and `Y` (`s..2s`) of order `s = 3t − 2` joined by
/// the matching `X[j] – Y[j]`; `Z` is the first `t − 1` vertices of `Y`; for
/// each `i < t` the pair `x_i = 2s + 2i`, `y_i = 2s + 2i + 1` forms a clique
/// with `Z`. Order `8t − 4`.
pub fn remark27_graph(t: usize) -> Result<Graph, FamilyError> {
    if t < 2 {
        return Err(bad("remark27 needs t >= 2"));
    }
    let s = 3 * t - 2;
    let order = 2 * s + 2 * t;
    check_order(order)?;
    let mut pairs = Vec::new();
    for base in [0, s] {
        for i in 0..s {
            for j in i + 1..s {
                pairs.push((base + i, base + j));
            }
        }
    }
    pairs.extend((0..s).map(|j| (j, s + j)));
    let z: Vec<usize> = (s..s + t - 1).collect();
    for i in 0..t {
        let (x, y) = (2 * s + 2 * i, 2 * s + 2 * i + 1);
        pairs.push((x, y));
        for &w in &z {
            pairs.push((x, w));
            pairs.push((y, w));
        }
    }
    Ok(Graph::new(order, pairs)?)
}

/// Cartesian product; vertex `(a, b)` gets id `a * |G2| + b`.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Result<Graph, FamilyError> {
    let (n1, n2) = (g1.order(), g2.order());
    let order = n1 * n2;
    check_order(order)?;
    let id = |a: usize, b: usize| a * n2 + b;
    let mut pairs = Vec::new();
    for a in 0..n1 {
        for e in g2.edges() {
            pairs.push((id(a, e.u), id(a, e.v)));
        }
    }
    for e in g1.edges() {
        for b in 0..n2 {
            pairs.push((id(e.u, b), id(e.v, b)));
        }
    }
    Ok(Graph::new(order, pairs)?)
}

/// A perfect matching between two vertex sets of equal size, stored as the
/// permutation `i -> partner(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching(Vec<usize>);

impl Matching {
    pub fn identity(n: usize) -> Self {
        Matching((0..n).collect())
    }

    /// Pseudorandom permutation matching, fixed by `seed`.
    pub fn seeded(n: usize, seed: u64) -> Self {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        Matching(perm)
    }

    pub fn from_permutation(perm: Vec<usize>) -> Result<Self, FamilyError> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(FamilyError::NotAMatching(format!(
                    "{perm:?} is not a permutation"
                )));
            }
            seen[p] = true;
        }
        Ok(Matching(perm))
    }

    /// Reads a matching given as edges between `0..n` and `n..2n`.
    pub fn from_cross_edges(n: usize, edges: &EdgeSet) -> Result<Self, FamilyError> {
        if edges.len() != n {
            return Err(FamilyError::NotAMatching(format!(
                "{} edges for {n} vertices per side",
                edges.len()
            )));
        }
        let mut perm = vec![usize::MAX; n];
        for e in edges {
            if e.u >= n || e.v < n || e.v >= 2 * n {
                return Err(FamilyError::NotAMatching(format!("{e} does not cross the sides")));
            }
            if perm[e.u] != usize::MAX {
                return Err(FamilyError::NotAMatching(format!("vertex {} matched twice", e.u)));
            }
            perm[e.u] = e.v - n;
        }
        Matching::from_permutation(perm)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn partner(&self, i: usize) -> usize {
        self.0[i]
    }
}

/// `G(G0, G1; M)`: `G0` on `0..n`, `G1` on `n..2n`, joined by `M`.
pub fn matching_join(g0: &Graph, g1: &Graph, m: &Matching) -> Result<Graph, FamilyError> {
    let n = g0.order();
    if g1.order() != n {
        return Err(FamilyError::SizeMismatch(n, g1.order()));
    }
    if m.len() != n {
        return Err(FamilyError::NotAMatching(format!(
            "matching covers {} vertices, parts have {n}",
            m.len()
        )));
    }
    check_order(2 * n)?;
    let joined = g0.disjoint_union(g1)?;
    let pairs = joined
        .edges()
        .iter()
        .map(|e| (e.u, e.v))
        .chain((0..n).map(|i| (i, n + m.partner(i))));
    Ok(Graph::new(2 * n, pairs)?)
}

/// `G(G0, …, G_{m−1}; M)`: part `i` occupies `i*n..(i+1)*n`; `matchings[i]`
/// joins part `i` to part `i+1 mod m`.
pub fn ring_join(parts: &[Graph], matchings: &[Matching]) -> Result<Graph, FamilyError> {
    let m = parts.len();
    if m < 3 {
        return Err(FamilyError::TooFewParts(m));
    }
    let n = parts[0].order();
    if let Some(p) = parts.iter().find(|p| p.order() != n) {
        return Err(FamilyError::SizeMismatch(n, p.order()));
    }
    if matchings.len() != m {
        return Err(FamilyError::NotAMatching(format!(
            "{} matchings for {m} parts",
            matchings.len()
        )));
    }
    if let Some(bad_m) = matchings.iter().find(|x| x.len() != n) {
        return Err(FamilyError::NotAMatching(format!(
            "matching covers {} vertices, parts have {n}",
            bad_m.len()
        )));
    }
    check_order(m * n)?;
    let mut pairs = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        pairs.extend(p.edges().iter().map(|e| (i * n + e.u, i * n + e.v)));
        let next = (i + 1) % m;
        pairs.extend((0..n).map(|j| (i * n + j, next * n + matchings[i].partner(j))));
    }
    Ok(Graph::new(m * n, pairs)?)
}

/// `G(n, d)`: `u ~ v` iff `u − v ≡ ±d^i (mod n)` for `0 <= i <= ⌈log_d n⌉ − 1`.
pub fn circulant(n: usize, d: usize) -> Result<Graph, FamilyError> {
    if n < 3 || d < 2 {
        return Err(bad("circulant needs n >= 3 and d >= 2"));
    }
    check_order(n)?;
    let mut jumps = Vec::new();
    let mut p = 1usize;
    // d^i < n holds exactly for i < ⌈log_d n⌉.
    while p < n {
        jumps.push(p);
        p *= d;
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for &j in &jumps {
            for v in [(u + j) % n, (u + n - j) % n] {
                if u < v && !pairs.contains(&(u, v)) {
                    pairs.push((u, v));
                }
            }
        }
    }
    Ok(Graph::new(n, pairs)?)
}

/// `C(d1, …, dn) = C_{d1} × … × C_{dn}`.
pub fn toroidal_mesh(dims: &[usize]) -> Result<Graph, FamilyError> {
    if dims.len() < 2 {
        return Err(bad("toroidal mesh needs at least two dimensions"));
    }
    if dims.iter().any(|&d| d < 3) {
        return Err(bad("toroidal mesh dimensions must be >= 3"));
    }
    let order = dims
        .iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d))
        .unwrap_or(usize::MAX);
    check_order(order)?;
    let mut g = cycle(dims[0])?;
    for &d in &dims[1..] {
        g = cartesian_product(&g, &cycle(d)?)?;
    }
    Ok(g)
}

const REGULAR_RESTARTS: usize = 2000;

/// Random connected simple k-regular graph from the pairing model: points are
/// paired at random, pairings that would create a loop or a repeated edge are
/// redrawn, and the process restarts when it gets stuck or the result is
/// disconnected. Deterministic for a given seed.
pub fn random_regular(n: usize, k: usize, seed: u64) -> Result<Graph, FamilyError> {
    if k == 0 || k >= n || (n * k) % 2 == 1 {
        return Err(FamilyError::Infeasible { n, k });
    }
    check_order(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..REGULAR_RESTARTS {
        if let Some(pairs) = try_pairing(n, k, &mut rng) {
            let g = Graph::new(n, pairs)?;
            if g.is_connected() {
                return Ok(g);
            }
        }
    }
    Err(FamilyError::RetriesExhausted {
        n,
        k,
        tries: REGULAR_RESTARTS,
    })
}

fn try_pairing(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Option<Vec<(usize, usize)>> {
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
    let mut adj = vec![vec![false; n]; n];
    let mut pairs = Vec::with_capacity(n * k / 2);
    while !points.is_empty() {
        let mut placed = false;
        for _ in 0..50 {
            let i = rng.gen_range(0..points.len());
            let j = rng.gen_range(0..points.len());
            let (a, b) = (points[i], points[j]);
            if i == j || a == b || adj[a][b] {
                continue;
            }
            adj[a][b] = true;
            adj[b][a] = true;
            pairs.push((a, b));
            let (hi, lo) = if i > j { (i, j) } else { (j, i) };
            points.swap_remove(hi);
            points.swap_remove(lo);
            placed = true;
            break;
        }
        if !placed {
            return None;
        }
    }
    Some(pairs)
}

fn check_order(n: usize) -> Result<(), FamilyError> {
    if n > MAX_VERTICES {
        Err(FamilyError::TooLarge(n))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn degree_sequence(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable();
        d
    }

    #[test]
    fn named_graphs() {
        let k4 = complete(4).unwrap();
        assert_eq!((k4.order(), k4.size(), k4.regular_degree()), (4, 6, Some(3)));
        let k33 = complete_bipartite(3, 3).unwrap();
        assert_eq!((k33.size(), k33.girth()), (9, Some(4)));
        let p = petersen();
        assert_eq!((p.order(), p.size(), p.girth()), (10, 15, Some(5)));
        assert!(cycle(2).is_err());
        assert!(complete(0).is_err());
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn hypercubes() {
        let q4 = hypercube(4).unwrap();
        assert_eq!((q4.order(), q4.size(), q4.regular_degree(), q4.girth()), (16, 32, Some(4), Some(4)));
        let q1 = hypercube(1).unwrap();
        assert_eq!(q1, complete(2).unwrap());
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.order(), q3.size()), (8, 12));
        assert!(hypercube(0).is_err());
        assert!(hypercube(8).is_err());
    }

    #[test]
    fn star_composites() {
        let s = star_composite(5, 1).unwrap();
        assert_eq!(s, complete_bipartite(1, 5).unwrap().relabel(&[5, 0, 1, 2, 3, 4]));
        let g = star_composite(3, 2).unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(g.degree(6), 6);
        let g = star_composite(2, 3).unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(g.size(), 2 * 3 + 6);
        assert!(star_composite(0, 2).is_err());
        assert!(star_composite(2, 0).is_err());
    }

    #[test]
    fn remark25_shape() {
        let g = remark25_graph();
        assert_eq!(g.order(), 10);
        // The figure has 19 edges; i and j are the two degree-2 vertices.
        assert_eq!(g.size(), 19);
        assert_eq!(g.min_degree(), 2);
        assert_eq!(g.degree(8), 2);
        assert_eq!(g.degree(9), 2);
    }

    #[test]
    fn remark27_shape() {
        for t in 2..=4 {
            let g = remark27_graph(t).unwrap();
            assert_eq!(g.order(), 8 * t - 4);
            assert_eq!(g.min_degree(), t);
            assert_eq!(g.xi().unwrap(), 2 * t - 2);
            assert_eq!(g.eta().unwrap(), t);
        }
        assert_eq!(remark27_graph(3).unwrap().order(), 20);
        assert!(remark27_graph(1).is_err());
    }

    #[test]
    fn products() {
        let k2 = complete(2).unwrap();
        let k3 = complete(3).unwrap();
        let h = cartesian_product(&cartesian_product(&k2, &k3).unwrap(), &k3).unwrap();
        assert_eq!((h.order(), h.regular_degree()), (18, Some(5)));
        let k4 = complete(4).unwrap();
        let g = cartesian_product(&k4, &k4).unwrap();
        assert_eq!((g.order(), g.size(), g.regular_degree()), (16, 48, Some(6)));
        let c4 = cycle(4).unwrap();
        let t = cartesian_product(&c4, &c4).unwrap();
        assert_eq!((t.order(), t.regular_degree(), t.girth()), (16, Some(4), Some(4)));
        let big = complete(12).unwrap();
        assert_eq!(cartesian_product(&big, &big), Err(FamilyError::TooLarge(144)));
    }

    #[test]
    fn matching_joins() {
        let q3 = hypercube(3).unwrap();
        let g = matching_join(&q3, &q3, &Matching::identity(8)).unwrap();
        assert_eq!(g, hypercube(4).unwrap());
        let seeded = matching_join(&q3, &q3, &Matching::seeded(8, 11)).unwrap();
        assert_eq!(degree_sequence(&seeded), vec![4; 16]);
        let c5 = cycle(5).unwrap();
        let g = matching_join(&c5, &c5, &Matching::identity(5)).unwrap();
        assert_eq!((g.order(), g.regular_degree()), (10, Some(3)));
        assert_eq!(
            matching_join(&c5, &q3, &Matching::identity(5)),
            Err(FamilyError::SizeMismatch(5, 8))
        );
        assert!(Matching::from_permutation(vec![0, 0, 1]).is_err());
        let cross = EdgeSet::from_edges([Edge::new(0, 4), Edge::new(1, 3), Edge::new(2, 5)]);
        let m = Matching::from_cross_edges(3, &cross).unwrap();
        assert_eq!((m.partner(0), m.partner(1), m.partner(2)), (1, 0, 2));
        let clash = EdgeSet::from_edges([Edge::new(0, 4), Edge::new(0, 3), Edge::new(2, 5)]);
        assert!(Matching::from_cross_edges(3, &clash).is_err());
    }

    #[test]
    fn ring_joins() {
        let q3 = hypercube(3).unwrap();
        let parts = vec![q3.clone(); 4];
        let ids = vec![Matching::identity(8); 4];
        let g = ring_join(&parts, &ids).unwrap();
        assert_eq!((g.order(), g.regular_degree()), (32, Some(5)));
        assert!(g.is_triangle_free());

        let c4 = cycle(4).unwrap();
        let g = ring_join(&vec![c4.clone(); 4], &vec![Matching::identity(4); 4]).unwrap();
        assert_eq!(g, cartesian_product(&c4, &c4).unwrap());

        assert_eq!(
            ring_join(&[c4.clone(), c4.clone()], &[Matching::identity(4), Matching::identity(4)]),
            Err(FamilyError::TooFewParts(2))
        );
    }

    #[test]
    fn circulants() {
        // Jumps are measured, not assumed: G(8, 2) uses 1, 2 and 4 = -4.
        let g = circulant(8, 2).unwrap();
        assert_eq!(g.regular_degree(), Some(5));
        assert_eq!(circulant(5, 4).unwrap(), cycle(5).unwrap());
        let g = circulant(32, 4).unwrap();
        assert_eq!(g.regular_degree(), Some(5));
        assert!(circulant(2, 2).is_err());
        assert!(circulant(10, 1).is_err());
    }

    #[test]
    fn tori() {
        let c4 = cycle(4).unwrap();
        assert_eq!(toroidal_mesh(&[4, 4]).unwrap(), cartesian_product(&c4, &c4).unwrap());
        let t = toroidal_mesh(&[4, 4, 4]).unwrap();
        assert_eq!((t.order(), t.regular_degree()), (64, Some(6)));
        assert_eq!(toroidal_mesh(&[3, 4]).unwrap().girth(), Some(3));
        assert_eq!(toroidal_mesh(&[5, 5, 6]), Err(FamilyError::TooLarge(150)));
        assert!(toroidal_mesh(&[4]).is_err());
        assert!(toroidal_mesh(&[2, 4]).is_err());
    }

    #[test]
    fn random_regular_graphs() {
        let g = random_regular(10, 3, 1).unwrap();
        assert_eq!((g.order(), g.regular_degree()), (10, Some(3)));
        assert!(g.is_connected());
        assert_eq!(random_regular(5, 3, 1), Err(FamilyError::Infeasible { n: 5, k: 3 }));
        assert_eq!(random_regular(14, 5, 99).unwrap(), random_regular(14, 5, 99).unwrap());
        for seed in 0..20 {
            let g = random_regular(14, 5, seed).unwrap();
            assert_eq!(g.regular_degree(), Some(5));
        }
    }
}
