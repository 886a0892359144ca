//! Graph corpora: exhaustive small graphs up to isomorphism and the named
//! builtin collections.
//!
//! Small graphs are grown one vertex at a time. Every graph on `n` vertices
//! arises from one on `n − 1` vertices by adding a vertex with some
//! neighbourhood (and every connected one from a connected one, by deleting
//! a leaf of a spanning tree), so augmenting all representatives and
//! deduplicating by canonical form is complete.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::extraconn::is_super_lambda_h_def;
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::io::graph6;

/// Largest order supported by the exhaustive generator.
pub const MAX_SMALL_ORDER: usize = 10;

type Rows = Vec<u16>;

/// Canonical code: upper-triangle adjacency bits under the labelling that
/// maximises them among all leaves of an individualisation-refinement tree.
fn canonical_code(rows: &[u16]) -> u64 {
    let n = rows.len();
    let colors = refine(rows, vec![0; n]);
    let mut best = 0u64;
    search(rows, colors, &mut best);
    best
}

/// Equitable refinement of an ordered colouring. New colours are ranks of
/// `(old colour, sorted neighbour colours)`, so the result depends only on
/// the isomorphism class of the coloured graph.
fn refine(rows: &[u16], mut colors: Vec<u8>) -> Vec<u8> {
    let n = rows.len();
    loop {
        let keys: Vec<(u8, Vec<u8>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u8> = (0..n).filter(|&w| rows[v] >> w & 1 == 1).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let distinct: BTreeSet<&(u8, Vec<u8>)> = keys.iter().collect();
        let ranked: Vec<&(u8, Vec<u8>)> = distinct.into_iter().collect();
        let before = colors.iter().collect::<BTreeSet<_>>().len();
        let next: Vec<u8> = keys
            .iter()
            .map(|k| ranked.binary_search(&k).expect("present") as u8)
            .collect();
        let grew = ranked.len() > before;
        colors = next;
        if !grew {
            return colors;
        }
    }
}

fn search(rows: &[u16], colors: Vec<u8>, best: &mut u64) {
    let n = rows.len();
    let mut size = [0usize; 16];
    colors.iter().for_each(|&c| size[c as usize] += 1);
    let Some(cell) = (0..n).find(|&c| size[c] > 1) else {
        *best = (*best).max(leaf_code(rows, &colors));
        return;
    };
    for v in (0..n).filter(|&v| colors[v] as usize == cell) {
        // Individualise v: it keeps the cell's colour, the rest move up one.
        let split: Vec<u8> = (0..n)
            .map(|w| {
                let c = colors[w];
                if c as usize > cell || (c as usize == cell && w != v) {
                    c + 1
                } else {
                    c
                }
            })
            .collect();
        search(rows, refine(rows, split), best);
    }
}

fn leaf_code(rows: &[u16], colors: &[u8]) -> u64 {
    let n = rows.len();
    let mut at = vec![0usize; n];
    for v in 0..n {
        at[colors[v] as usize] = v;
    }
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | u64::from(rows[at[i]] >> at[j] & 1);
        }
    }
    code
}

fn rows_from_code(n: usize, code: u64) -> Rows {
    let mut rows = vec![0u16; n];
    let mut bit = n * n.saturating_sub(1) / 2;
    for i in 0..n {
        for j in i + 1..n {
            bit -= 1;
            if code >> bit & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    rows
}

fn to_graph(rows: &[u16]) -> Graph {
    let n = rows.len();
    let pairs = (0..n).flat_map(|i| (i + 1..n).filter(move |&j| rows[i] >> j & 1 == 1).map(move |j| (i, j)));
    Graph::new(n, pairs).expect("valid rows")
}

fn grow(max_n: usize, connected: bool) -> Vec<Vec<u64>> {
    assert!(max_n <= MAX_SMALL_ORDER, "exhaustive generation is limited to {MAX_SMALL_ORDER} vertices");
    let mut levels: Vec<Vec<u64>> = vec![vec![], vec![0]];
    for n in 2..=max_n {
        let mut seen = BTreeSet::new();
        for &code in &levels[n - 1] {
            let base = rows_from_code(n - 1, code);
            let first = if connected { 1 } else { 0 };
            for nb in first..(1u16 << (n - 1)) {
                let mut rows = base.clone();
                for (w, row) in rows.iter_mut().enumerate() {
                    if nb >> w & 1 == 1 {
                        *row |= 1 << (n - 1);
                    }
                }
                rows.push(nb);
                seen.insert(canonical_code(&rows));
            }
        }
        levels.push(seen.into_iter().collect());
    }
    levels
}

/// All graphs of order `n` up to isomorphism, in canonical labelling.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![];
    }
    grow(n, false)[n].iter().map(|&c| to_graph(&rows_from_code(n, c))).collect()
}

/// All connected graphs of order `1..=max_n` up to isomorphism, by order.
pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    if max_n == 0 {
        return vec![];
    }
    let levels = grow(max_n, true);
    (1..=max_n)
        .flat_map(|n| levels[n].iter().map(move |&c| to_graph(&rows_from_code(n, c))))
        .collect()
}

/// Whether two small graphs are isomorphic.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let rows = |g: &Graph| -> Rows {
        (0..g.order())
            .map(|v| g.neighbors(v).iter().fold(0u16, |r, w| r | 1 << w))
            .collect()
    };
    assert!(a.order() <= MAX_SMALL_ORDER && b.order() <= MAX_SMALL_ORDER);
    a.order() == b.order() && a.size() == b.size() && canonical_code(&rows(a)) == canonical_code(&rows(b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    /// Graphs with exactly known values.
    PaperExact,
    /// Every connected graph on at most 8 vertices plus 200 random regular graphs.
    Small8,
    /// The first 50 seeded random cubic graphs of order 10 to 16 that are
    /// super-λ'.
    Cubic,
    /// Toroidal meshes, recursive circulants and ring compositions.
    Torus,
}

impl Builtin {
    pub const ALL: [Builtin; 4] = [Builtin::PaperExact, Builtin::Small8, Builtin::Cubic, Builtin::Torus];
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Builtin::PaperExact => "paper-exact",
            Builtin::Small8 => "small8",
            Builtin::Cubic => "cubic",
            Builtin::Torus => "torus",
        })
    }
}

impl FromStr for Builtin {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.to_string() == s)
            .ok_or_else(|| format!("unknown builtin corpus `{s}` (expected paper-exact, small8, cubic or torus)"))
    }
}

fn parse_all(specs: &[&str]) -> Vec<FamilySpec> {
    specs.iter().map(|s| s.parse().expect("builtin spec parses")).collect()
}

/// `count` random regular graphs cycling through the degrees `ks`, with
/// orders drawn in turn from those allowed for each degree up to `max_n`.
pub fn random_regular_specs(count: usize, ks: &[usize], min_n: usize, max_n: usize, seed: u64) -> Vec<FamilySpec> {
    (0..count)
        .map(|i| {
            let k = ks[i % ks.len()];
            let orders: Vec<usize> = (min_n.max(k + 1)..=max_n).filter(|n| (n * k).is_multiple_of(2)).collect();
            let n = orders[(i / ks.len()) % orders.len()];
            FamilySpec::RandomRegular {
                n,
                k,
                seed: seed.wrapping_add(i as u64),
            }
        })
        .collect()
}

/// Seeded random cubic graphs of order 10, 12, 14, 16 in turn, keeping the
/// first `count` that are super-λ'. Small random cubic graphs rarely have
/// girth 5, so most draws are discarded.
pub fn super_cubic_specs(count: usize, seed: u64) -> Vec<FamilySpec> {
    const ORDERS: [usize; 4] = [10, 12, 14, 16];
    let mut out = Vec::with_capacity(count);
    let mut i = 0u64;
    while out.len() < count {
        let spec = FamilySpec::RandomRegular {
            n: ORDERS[(i % 4) as usize],
            k: 3,
            seed: seed.wrapping_add(i),
        };
        i += 1;
        let g = spec.build().expect("cubic graphs of even order exist");
        if is_super_lambda_h_def(&g, 1).is_ok_and(|c| c.is_super) {
            out.push(spec);
        }
    }
    out
}

/// The specs of a builtin corpus. `seed` drives its random members.
pub fn builtin_corpus(b: Builtin, seed: u64) -> Vec<FamilySpec> {
    match b {
        Builtin::PaperExact => parse_all(&[
            "complete:4",
            "bipartite:3,3",
            "cycle:4",
            "cycle:5",
            "cycle:8",
            "petersen",
            "hypercube:3",
            "hypercube:4",
            "hypercube:5",
            "star:3,2",
            "remark25",
            "remark27:2",
            "remark27:3",
            "cartesian:K2,K3,K3",
            "cartesian:K4,K4",
            "torus:4,4",
            "ring:Q3*4:identity",
        ]),
        Builtin::Small8 => connected_graphs(8)
            .iter()
            .map(|g| FamilySpec::Graph6(graph6::encode(g)))
            .chain(random_regular_specs(200, &[3, 4, 5], 8, 14, seed))
            .collect(),
        Builtin::Cubic => super_cubic_specs(50, seed.wrapping_add(1000)),
        Builtin::Torus => parse_all(&[
            "torus:3,3",
            "torus:3,4",
            "torus:4,4",
            "torus:4,5",
            "torus:5,5",
            "torus:4,6",
            "circulant:8,2",
            "circulant:16,2",
            "circulant:8,4",
            "circulant:12,4",
            "circulant:16,4",
            "circulant:18,3",
            "circulant:32,4",
            "ring:Q3*4:identity",
            "ring:C4*5:identity",
        ]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn counts_of_all_graphs() {
        let counts: Vec<usize> = (1..=6).map(|n| all_graphs(n).len()).collect();
        assert_eq!(counts, [1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn counts_of_connected_graphs() {
        let gs = connected_graphs(7);
        let mut counts = [0usize; 8];
        for g in &gs {
            assert!(g.is_connected());
            counts[g.order()] += 1;
        }
        assert_eq!(&counts[1..], [1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn canonical_form_is_labelling_invariant() {
        let p = families::petersen();
        let perm: Vec<usize> = (0..10).map(|v| (v * 3 + 1) % 10).collect();
        assert!(isomorphic(&p, &p.relabel(&perm)));
        let c = families::cycle(10).unwrap();
        assert!(!isomorphic(&p, &c));
        // Same degree sequence, different graphs: C6 and two triangles.
        let two_triangles = Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!isomorphic(&families::cycle(6).unwrap(), &two_triangles));
    }

    #[test]
    fn builtin_names_round_trip() {
        for b in Builtin::ALL {
            assert_eq!(b.to_string().parse::<Builtin>(), Ok(b));
        }
        assert!("nope".parse::<Builtin>().is_err());
    }

    #[test]
    fn builtin_corpora_generate() {
        for b in [Builtin::PaperExact, Builtin::Cubic, Builtin::Torus] {
            for spec in builtin_corpus(b, 1) {
                spec.build().unwrap_or_else(|e| panic!("{spec}: {e}"));
            }
        }
        let cubic = builtin_corpus(Builtin::Cubic, 1);
        assert_eq!(cubic.len(), 50);
        for spec in &cubic {
            let g = spec.build().unwrap();
            assert_eq!(g.regular_degree(), Some(3));
            assert!((10..=16).contains(&g.order()));
            assert!(is_super_lambda_h_def(&g, 1).unwrap().is_super);
        }
        let rr = random_regular_specs(200, &[3, 4, 5], 8, 14, 7);
        assert_eq!(rr.len(), 200);
        for spec in &rr {
            let g = spec.build().unwrap();
            assert!(g.order() <= 14 && g.is_connected());
        }
    }
}
