use proptest::prelude::*;

use extraconn::extraconn::{is_super_lambda_h_def, is_super_lambda_h_fast, lambda_h};
use extraconn::families::{self, Matching};
use extraconn::io::{self, Format};
use extraconn::persistence::rho_h;
use extraconn::theorems::corpus::isomorphic;
use extraconn::{Graph, VertexSet};

/// Random graph on `lo..=hi` vertices, each pair present with the drawn bit.
fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = vec![];
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

fn connected(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    graph(lo, hi).prop_filter("connected", Graph::is_connected)
}

fn subset(g: &Graph, bits: u128) -> VertexSet {
    VertexSet::from_bits(bits) & g.vertices()
}

fn lam(g: &Graph, h: usize) -> Option<usize> {
    lambda_h(g, h).unwrap().map(|c| c.value)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn boundary_is_symmetric(g in graph(1, 12), bits in any::<u128>()) {
        let x = subset(&g, bits);
        let y = !x & g.vertices();
        prop_assert_eq!(g.boundary_size(x), g.boundary_size(y));
    }

    #[test]
    fn degree_sum_is_twice_size(g in graph(1, 12)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
    }

    #[test]
    fn components_partition_the_set(g in graph(1, 12), bits in any::<u128>()) {
        let x = subset(&g, bits);
        let comps = g.components_within(x);
        prop_assert_eq!(comps.iter().map(|c| c.len()).sum::<usize>(), x.len());
        if !x.is_empty() {
            prop_assert_eq!(g.is_connected_induced(x).unwrap(), comps.len() == 1);
        }
        let whole = g.components();
        prop_assert_eq!(whole.iter().map(|c| c.len()).sum::<usize>(), g.order());
        prop_assert_eq!(g.is_connected(), whole.len() == 1);
    }

    #[test]
    fn xi_h_base_cases(g in graph(2, 10)) {
        prop_assert_eq!(g.xi_h(0), Some(g.min_degree()));
        if g.size() >= 1 {
            prop_assert_eq!(g.xi_h(1), g.xi().ok());
        }
    }

    #[test]
    fn independent_boundary_edges(g in connected(2, 10), bits in any::<u128>()) {
        let k = g.vertex_connectivity();
        let x = subset(&g, bits);
        let y = !x & g.vertices();
        prop_assume!(!x.is_empty() && !y.is_empty() && x.len() >= k && y.len() >= k);
        let m = g.max_independent_boundary_edges(x).unwrap();
        prop_assert!(m >= k.min(x.len()).min(y.len()));
    }

    #[test]
    fn lambda_zero_is_edge_connectivity(g in connected(2, 11)) {
        let l = lam(&g, 0);
        prop_assert_eq!(l, Some(g.edge_connectivity()));
        prop_assert!(l.unwrap() <= g.min_degree());
    }

    #[test]
    fn lambda_chain_is_monotone(g in connected(2, 11)) {
        let levels: Vec<_> = (0..4).map_while(|h| lam(&g, h)).collect();
        prop_assert!(levels.windows(2).all(|w| w[0] <= w[1]), "{:?}", levels);
    }

    #[test]
    fn lambda_h_exists_below_min_degree(g in connected(2, 10)) {
        let d = g.min_degree();
        prop_assume!(d >= 1 && g.order() >= 2 * (d + 1));
        let hub = (g.order() - 1) % d == 0
            && isomorphic(&g, &families::star_composite((g.order() - 1) / d, d).unwrap());
        prop_assume!(!hub);
        for h in 0..=d.min(3) {
            let l = lam(&g, h);
            prop_assert!(l.is_some(), "no {}-extra cut", h);
            prop_assert!(l <= g.xi_h(h), "h = {}", h);
        }
    }

    #[test]
    fn fast_super_test_agrees_in_its_regime(g in connected(3, 10), h in 0usize..3) {
        let Some(l) = lam(&g, h) else { return Ok(()) };
        prop_assume!(Some(l) <= g.xi_h(h));
        let def = is_super_lambda_h_def(&g, h).unwrap().is_super;
        prop_assert_eq!(is_super_lambda_h_fast(&g, h).unwrap(), def);
    }

    #[test]
    fn persistence_stays_below_min_degree(g in connected(3, 9), h in 0usize..3) {
        prop_assume!(lam(&g, h).is_some() && is_super_lambda_h_def(&g, h).unwrap().is_super);
        let r = rho_h(&g, h).unwrap();
        prop_assert!(r.rho < g.min_degree().max(1));
        if let Some(w) = r.witness {
            prop_assert_eq!(w.len(), r.rho + 1);
        }
    }

    #[test]
    fn formats_round_trip(g in graph(1, 20)) {
        for f in [Format::EdgeList, Format::Graph6] {
            let text = io::write_graph(&g, f);
            prop_assert_eq!(io::detect(&text), f);
            prop_assert_eq!(io::read_graph(&text).unwrap(), g.clone());
        }
    }

    #[test]
    fn joins_raise_degree(seed in any::<u64>(), m in 4usize..6) {
        let q3 = families::hypercube(3).unwrap();
        let two = families::matching_join(&q3, &q3, &Matching::seeded(8, seed)).unwrap();
        prop_assert_eq!(two.regular_degree(), Some(4));
        let parts = vec![q3; m];
        let ms: Vec<_> = (0..m as u64).map(|i| Matching::seeded(8, seed ^ i)).collect();
        let ring = families::ring_join(&parts, &ms).unwrap();
        prop_assert_eq!(ring.regular_degree(), Some(5));
        prop_assert!(ring.is_triangle_free());
    }
}

#[test]
fn every_corpus_graph_round_trips() {
    use extraconn::theorems::corpus::{builtin_corpus, Builtin};
    for b in Builtin::ALL {
        for spec in builtin_corpus(b, 7) {
            let g = spec.build().unwrap();
            for f in [Format::EdgeList, Format::Graph6] {
                assert_eq!(io::read_graph(&io::write_graph(&g, f)).unwrap(), g, "{spec} as {f:?}");
            }
        }
    }
}
