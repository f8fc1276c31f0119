mod common;

use std::collections::HashSet;

use common::named;
use linesym_core::constructions::EdgeIndex;
use linesym_core::graph6::{emit_graph6, parse_graph6};
use linesym_core::metrics::{diameter, distance, girth, DistanceMatrix};
use linesym_core::symmetry::{induced_edge_action, is_s_arc_transitive, orbit_of};
use linesym_core::walks::{enumerate_arcs, enumerate_geodesics, lmap, lmap_invert};
use linesym_core::{automorphisms, clique_graph, isomorphic, line_graph, subdivision_graph, Graph, VertexSet};
use proptest::prelude::*;

/// Arbitrary simple graph on 1..=max_n vertices.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// Connected graph: a random tree plus arbitrary extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents = (1..n).map(|i| 0..i).collect::<Vec<_>>();
        let extra = proptest::collection::vec((0..n, 0..n), 0..2 * n);
        (parents, extra).prop_map(move |(parents, extra)| {
            let tree = parents.into_iter().enumerate().map(|(i, p)| (i + 1, p));
            Graph::new(n, tree.chain(extra.into_iter().filter(|(u, v)| u != v))).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edges_read_back(n in 1usize..12, raw in proptest::collection::vec((0usize..12, 0usize..12), 0..40)) {
        let edges: Vec<(usize, usize)> = raw.into_iter().filter(|&(u, v)| u < n && v < n && u != v).collect();
        let g = Graph::new(n, edges.iter().copied()).unwrap();
        let expected: HashSet<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let got: HashSet<(usize, usize)> = g.edges().collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn isomorphism_is_reflexive_and_symmetric((g, p) in graph(9).prop_flat_map(|g| { let n = g.order(); (Just(g), permutation(n)) })) {
        let h = g.relabel(&p).unwrap();
        let phi = isomorphic(&g, &g).expect("reflexive");
        for (u, v) in g.edges() {
            prop_assert!(g.has_edge(phi[u], phi[v]));
        }
        let forward = isomorphic(&g, &h).expect("relabelled copy");
        let backward = isomorphic(&h, &g).expect("symmetric");
        for (u, v) in g.edges() {
            prop_assert!(h.has_edge(forward[u], forward[v]));
        }
        for (u, v) in h.edges() {
            prop_assert!(g.has_edge(backward[u], backward[v]));
        }
    }

    #[test]
    fn isomorphism_rejects_different_graphs(g in graph(7), h in graph(7)) {
        let same_degrees = {
            let mut a: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
            let mut b: Vec<usize> = (0..h.order()).map(|v| h.degree(v)).collect();
            a.sort();
            b.sort();
            a == b
        };
        if let Some(phi) = isomorphic(&g, &h) {
            prop_assert!(same_degrees);
            prop_assert_eq!(g.size(), h.size());
            for (u, v) in g.edges() {
                prop_assert!(h.has_edge(phi[u], phi[v]));
            }
        }
    }

    #[test]
    fn induced_on_everything_is_isomorphic(g in graph(10)) {
        let all = VertexSet::new((0..g.order()).collect());
        prop_assert!(isomorphic(&g.induced_subgraph(&all).unwrap(), &g).is_some());
    }

    #[test]
    fn line_graph_degrees(g in graph(10)) {
        prop_assume!(g.size() > 0);
        let l = line_graph(&g).unwrap();
        let idx = l.edge_index().unwrap();
        prop_assert_eq!(l.graph.order(), g.size());
        for (i, &(u, v)) in idx.edges().iter().enumerate() {
            prop_assert_eq!(l.graph.degree(i), g.degree(u) + g.degree(v) - 2);
        }
    }

    #[test]
    fn subdivision_is_bipartite_with_doubled_girth(g in graph(9)) {
        prop_assume!(g.size() > 0);
        let s = subdivision_graph(&g).unwrap().graph;
        prop_assert_eq!(s.order(), g.order() + g.size());
        for (u, v) in s.edges() {
            prop_assert!((u < g.order()) != (v < g.order()));
        }
        for e in g.order()..s.order() {
            prop_assert_eq!(s.degree(e), 2);
        }
        prop_assert_eq!(girth(&s), girth(&g).map(|x| 2 * x));
    }

    #[test]
    fn triangle_inequality(g in graph(10), a in 0usize..10, b in 0usize..10, c in 0usize..10) {
        let n = g.order();
        let (a, b, c) = (a % n, b % n, c % n);
        if let (Some(ab), Some(bc)) = (distance(&g, a, b).unwrap(), distance(&g, b, c).unwrap()) {
            prop_assert!(distance(&g, a, c).unwrap().unwrap() <= ab + bc);
        }
    }

    #[test]
    fn diameter_shifts(g in connected_graph(10)) {
        let d = diameter(&g).unwrap() as i64;
        let dl = diameter(&line_graph(&g).unwrap().graph).unwrap() as i64;
        let ds = diameter(&subdivision_graph(&g).unwrap().graph).unwrap() as i64;
        prop_assert!((-1..=1).contains(&(dl - d)));
        prop_assert!((0..=2).contains(&(ds - 2 * d)));
    }

    #[test]
    fn clique_graph_is_line_graph_without_triangles(g in connected_graph(10)) {
        prop_assume!(girth(&g).is_none_or(|x| x >= 4));
        let c = clique_graph(&g).unwrap().graph;
        let l = line_graph(&g).unwrap().graph;
        prop_assert!(isomorphic(&c, &l).is_some());
    }

    #[test]
    fn aut_orders_agree_with_line_graph(g in connected_graph(8)) {
        prop_assume!(g.order() >= 5);
        let l = line_graph(&g).unwrap().graph;
        prop_assert_eq!(automorphisms(&g).order().clone(), automorphisms(&l).order().clone());
    }

    #[test]
    fn aut_order_matches_oracle(g in graph(8)) {
        prop_assert_eq!(automorphisms(&g).order_u64(), Some(common::brute_force_aut_order(&g)));
    }

    #[test]
    fn generators_and_orbits(g in graph(9)) {
        let group = automorphisms(&g);
        group.check_preserves(&g).unwrap();
        let order = group.order_u64().unwrap();
        for v in 0..g.order() {
            prop_assert_eq!(order % orbit_of(&[v], &group).unwrap().len() as u64, 0);
        }
    }

    #[test]
    fn lmap_injective_and_invertible(g in connected_graph(9), s in 2usize..=4) {
        let idx = EdgeIndex::new(&g);
        let arcs = enumerate_arcs(&g, s).unwrap();
        let images: Vec<Vec<usize>> = arcs.iter().map(|a| lmap(&idx, a).unwrap().0).collect();
        let distinct: HashSet<&Vec<usize>> = images.iter().collect();
        prop_assert_eq!(distinct.len(), images.len());
        let l = line_graph(&g).unwrap().graph;
        let dl = DistanceMatrix::new(&l);
        for (a, t) in arcs.iter().zip(&images) {
            let is_geo = dl.get(t[0], t[s - 1]) == Some(s - 1);
            if is_geo {
                let back = lmap_invert(&idx, t).unwrap();
                prop_assert_eq!(back.vertices(), a.vertices());
            } else {
                prop_assert!(lmap_invert(&idx, t).is_err());
            }
        }
    }

    #[test]
    fn geodesics_are_arcs(g in connected_graph(10), s in 1usize..=4) {
        let d = diameter(&g).unwrap();
        prop_assume!(s <= d);
        let geo = enumerate_geodesics(&g, s).unwrap();
        let arcs: HashSet<Vec<usize>> = enumerate_arcs(&g, s).unwrap().into_iter().map(|w| w.into_vec()).collect();
        let dm = DistanceMatrix::new(&g);
        let filtered: Vec<Vec<usize>> = {
            let mut v: Vec<Vec<usize>> = arcs.iter().filter(|a| dm.get(a[0], a[s]) == Some(s)).cloned().collect();
            v.sort();
            v
        };
        let geo: Vec<Vec<usize>> = geo.into_iter().map(|w| w.into_vec()).collect();
        for w in &geo {
            prop_assert!(arcs.contains(w));
        }
        prop_assert_eq!(geo, filtered);
    }

    #[test]
    fn graph6_round_trip(g in graph(16)) {
        let bytes = emit_graph6(&g);
        prop_assert_eq!(String::from_utf8(bytes.clone()).unwrap(), common::reference_graph6(&g));
        prop_assert_eq!(parse_graph6(&bytes).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_mutated_length(g in graph(12), extra in 63u8..=126) {
        let mut bytes = emit_graph6(&g);
        bytes.push(extra);
        prop_assert!(parse_graph6(&bytes).is_err());
    }
}

#[test]
fn induced_action_is_a_homomorphism_on_line_graphs() {
    for name in ["petersen", "heawood", "k33", "complete(5)"] {
        let g = named(name);
        let idx = EdgeIndex::new(&g);
        let l = line_graph(&g).unwrap().graph;
        let group = automorphisms(&g);
        let elements = group.elements().unwrap();
        for p in elements.iter().step_by(7) {
            let pe = induced_edge_action(&idx, p).unwrap();
            assert!(pe.is_automorphism(&l));
            for q in elements.iter().step_by(11) {
                let qe = induced_edge_action(&idx, q).unwrap();
                assert_eq!(induced_edge_action(&idx, &p.then(q)).unwrap(), pe.then(&qe));
            }
        }
    }
}

#[test]
fn arc_transitivity_is_monotone_and_bounded() {
    for name in ["petersen", "heawood", "tutte_8_cage", "k33", "cube", "complete(4)", "line(petersen)"] {
        let g = named(name);
        let group = automorphisms(&g);
        let levels: Vec<bool> = (1..=8).map(|s| is_s_arc_transitive(&g, s, &group).unwrap()).collect();
        assert!(levels.windows(2).all(|w| w[0] || !w[1]), "{name}: {levels:?}");
        assert!(!levels[7], "{name} is 8-arc transitive");
        if g.is_regular() == Some(3) {
            assert!(!levels[5], "{name} cubic and 6-arc transitive");
        }
    }
}

#[test]
fn round_trips_on_line_graph_geodesics() {
    for (name, lengths) in [("petersen", 2..=3), ("heawood", 2..=4)] {
        let g = named(name);
        let idx = EdgeIndex::new(&g);
        let l = line_graph(&g).unwrap().graph;
        for s in lengths {
            let geo = enumerate_geodesics(&l, s - 1).unwrap();
            assert!(!geo.is_empty());
            for e in &geo {
                let a = lmap_invert(&idx, e).unwrap();
                assert!(a.is_arc());
                assert_eq!(lmap(&idx, &a).unwrap().0, e.vertices(), "{name} s={s}");
            }
        }
    }
}

#[test]
fn line_of_petersen_has_unique_far_neighbor() {
    let l = named("line(petersen)");
    let dm = DistanceMatrix::new(&l);
    for w in enumerate_geodesics(&l, 2).unwrap() {
        let (u, last) = (w[0], w[2]);
        let far = l.adj(last).iter().filter(|&&x| dm.get(u, x) == Some(3)).count();
        assert_eq!(far, 1);
    }
}

#[test]
fn catalog_degree_histograms() {
    for name in linesym_core::catalog::CatalogName::listing() {
        let g = linesym_core::catalog(&name).unwrap();
        let mut counts = vec![0usize; g.order()];
        for (u, v) in g.edges() {
            counts[u] += 1;
            counts[v] += 1;
        }
        let regular = counts.iter().all(|&c| c == counts[0]).then_some(counts[0]);
        assert_eq!(g.is_regular(), regular, "{name}");
    }
}
