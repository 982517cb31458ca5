use proptest::prelude::*;

use pconn::classes::random::{random_connected_spanning_subgraph, random_interval, rng};
use pconn::classes::{is_at_free, is_chain_graph, ChainSpec};
use pconn::coloring::{find_proper_path, is_proper_path_coloring};
use pconn::exact::{pc_decision, pc_exact};
use pconn::io::{decode_graph6, encode_graph6, parse_edge_list, write_edge_list};
use pconn::{Budget, Distance, EdgeColoring, Graph, VertexId, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", |g| g.is_connected())
}

/// Exhaustive search over simple paths, independent of the library.
fn has_proper_simple_path(g: &Graph, c: &[u8], u: VertexId, v: VertexId) -> bool {
    fn go(g: &Graph, c: &[u8], at: VertexId, v: VertexId, last: u8, seen: &mut [bool]) -> bool {
        if at == v {
            return true;
        }
        for &(w, e) in g.incident(at) {
            if !seen[w] && c[e] != last {
                seen[w] = true;
                if go(g, c, w, v, c[e], seen) {
                    return true;
                }
                seen[w] = false;
            }
        }
        false
    }
    let mut seen = vec![false; g.vertex_count()];
    seen[u] = true;
    go(g, c, u, v, 0, &mut seen)
}

fn oracle_is_proper_coloring(g: &Graph, c: &[u8]) -> bool {
    let n = g.vertex_count();
    (0..n).all(|u| (u + 1..n).all(|v| has_proper_simple_path(g, c, u, v)))
}

/// Whether some coloring with colors `1..=k` works, by trying all `k^m`.
fn oracle_decision(g: &Graph, k: u8) -> bool {
    let m = g.edge_count();
    let mut c = vec![1u8; m];
    loop {
        if oracle_is_proper_coloring(g, &c) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == m {
                return false;
            }
            if c[i] < k {
                c[i] += 1;
                break;
            }
            c[i] = 1;
            i += 1;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn distance_is_a_metric(g in connected(8)) {
        let n = g.vertex_count();
        let d: Vec<Vec<usize>> = (0..n)
            .map(|u| g.distances_from(u).unwrap().into_iter().map(|x| x.finite().unwrap()).collect())
            .collect();
        for u in 0..n {
            prop_assert_eq!(d[u][u], 0);
            for v in 0..n {
                prop_assert_eq!(d[u][v], d[v][u]);
                if u != v {
                    prop_assert!(d[u][v] >= 1);
                }
                prop_assert_eq!(d[u][v] == 1, g.has_edge(u, v));
                for w in 0..n {
                    prop_assert!(d[u][w] <= d[u][v] + d[v][w]);
                }
            }
        }
    }

    #[test]
    fn radius_and_diameter(g in connected(8)) {
        let r = g.radius().finite().unwrap();
        let d = g.diameter().finite().unwrap();
        prop_assert!(r <= d && d <= 2 * r);
    }

    #[test]
    fn disconnected_graphs_have_infinite_diameter(g in graph(7)) {
        prop_assert_eq!(g.diameter() == Distance::Unreachable, !g.is_connected());
    }

    #[test]
    fn layers_partition_the_vertices(g in connected(8), seed in any::<u64>()) {
        let n = g.vertex_count();
        let ids: Vec<VertexId> = (0..n).filter(|v| (seed >> (v % 64)) & 1 == 1).collect();
        prop_assume!(!ids.is_empty());
        let s = VertexSet::from_ids(n, ids).unwrap();
        let mut union = VertexSet::empty(n);
        let mut total = 0;
        for k in 0..n {
            let layer = g.k_step_neighborhood(&s, k).unwrap();
            total += layer.len();
            union.union_with(&layer);
        }
        prop_assert_eq!(total, n);
        prop_assert_eq!(union.len(), n);
        prop_assert_eq!(g.k_step_neighborhood(&s, 0).unwrap(), s);
    }

    #[test]
    fn induced_subgraph_keeps_adjacency(g in graph(8), mask in any::<u16>()) {
        let n = g.vertex_count();
        let ids: Vec<VertexId> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        prop_assume!(!ids.is_empty());
        let d = VertexSet::from_ids(n, ids.clone()).unwrap();
        let (sub, map) = g.induced_subgraph(&d).unwrap();
        prop_assert_eq!(&map, &ids);
        for a in 0..map.len() {
            for b in 0..map.len() {
                if a != b {
                    prop_assert_eq!(sub.has_edge(a, b), g.has_edge(map[a], map[b]));
                }
            }
        }
        prop_assert_eq!(sub.is_connected(), g.induces_connected(&d));
    }

    #[test]
    fn path_search_matches_enumeration(
        g in connected(7).prop_filter("few edges", |g| g.edge_count() <= 10),
        colors in proptest::collection::vec(1u8..=3, 10),
        ends in (0usize..7, 0usize..7),
    ) {
        let n = g.vertex_count();
        let (u, v) = (ends.0 % n, ends.1 % n);
        prop_assume!(u != v);
        let raw = colors[..g.edge_count()].to_vec();
        let c = EdgeColoring::new(&g, raw.iter().map(|&x| x.into()).collect()).unwrap();
        let found = find_proper_path(&g, &c, u, v).unwrap();
        prop_assert_eq!(found.is_some(), has_proper_simple_path(&g, &raw, u, v));
        let verdict = is_proper_path_coloring(&g, &c).unwrap();
        prop_assert_eq!(verdict.is_pass(), oracle_is_proper_coloring(&g, &raw));
    }

    #[test]
    fn graph6_round_trip(g in graph(12)) {
        prop_assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph(12)) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn chain_graphs_are_recognized(degrees in proptest::collection::vec(0usize..=5, 1..=5)) {
        let spec = ChainSpec::from_degrees(&degrees, 5).unwrap();
        let g = spec.realize().unwrap();
        let found = is_chain_graph(&g);
        prop_assert!(found.is_some());
        prop_assert_eq!(found.unwrap().realize().unwrap(), g);
    }

    #[test]
    fn interval_graphs_are_at_free(seed in any::<u64>(), n in 1usize..=9) {
        let (g, _) = random_interval(&mut rng(seed), n, 12).unwrap();
        prop_assert!(is_at_free(&g).is_free());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn decision_matches_brute_force(g in connected(5).prop_filter("few edges", |g| g.edge_count() <= 7)) {
        let b = Budget::default();
        for k in 1..=3u8 {
            prop_assert_eq!(pc_decision(&g, k.into(), &b).unwrap().is_some(), oracle_decision(&g, k));
        }
    }

    #[test]
    fn pc_is_monotone_under_spanning_subgraphs(g in connected(6), seed in any::<u64>()) {
        let b = Budget::default();
        let h = random_connected_spanning_subgraph(&mut rng(seed), &g, 0.4).unwrap();
        prop_assert!(pc_exact(&g, &b).unwrap().value <= pc_exact(&h, &b).unwrap().value);
    }

    #[test]
    fn exact_certificates_verify(g in connected(7)) {
        let r = pc_exact(&g, &Budget::default()).unwrap();
        prop_assert!(is_proper_path_coloring(&g, &r.certificate).unwrap().is_pass());
        prop_assert_eq!(r.certificate.color_count(), r.value as usize);
    }
}

#[test]
fn graph6_matches_networkx() {
    let text = include_str!("data/networkx_graph6.txt");
    for line in text.lines() {
        let mut parts = line.split_whitespace();
        let code = parts.next().unwrap();
        let n: usize = parts.next().unwrap().parse().unwrap();
        let mut edges: Vec<(VertexId, VertexId)> = parts
            .map(|p| {
                let (a, b) = p.split_once('-').unwrap();
                (a.parse().unwrap(), b.parse().unwrap())
            })
            .collect();
        edges.sort_unstable();
        if n == 0 {
            assert!(decode_graph6(code).is_err());
            continue;
        }
        let g = decode_graph6(code).unwrap();
        assert_eq!(g.vertex_count(), n, "{code}");
        assert_eq!(g.edges(), &edges[..], "{code}");
        assert_eq!(encode_graph6(&g), code);
    }
}
