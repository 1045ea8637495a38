//! Exhaustive small-order sweeps and randomized properties.

use ds_graph::{parse_graph6, to_graph6, Graph};
use proptest::prelude::*;

/// All labeled graphs on n vertices, as edge masks over the upper triangle.
fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for v in 0..n {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out
}

fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    permutations(a.n()).iter().any(|p| {
        (0..a.n()).all(|u| {
            ((u + 1)..a.n()).all(|v| a.has_edge(u, v) == b.has_edge(p[u], p[v]))
        })
    })
}

#[test]
fn distance_matrix_invariants_all_connected_up_to_6() {
    let mut connected = 0u64;
    for n in 1..=6 {
        for g in labeled_graphs(n).filter(Graph::is_connected) {
            connected += 1;
            let d = g.distance_matrix().unwrap();
            for i in 0..n {
                assert_eq!(d.get(i, i), 0);
                for j in 0..n {
                    assert_eq!(d.get(i, j), d.get(j, i));
                    if i != j {
                        assert!(d.get(i, j) >= 1);
                        assert_eq!(d.get(i, j) == 1, g.has_edge(i, j));
                    }
                    for k in 0..n {
                        assert!(d.get(i, k) <= d.get(i, j) + d.get(j, k));
                    }
                }
            }
        }
    }
    // labeled connected counts for n = 1..6
    assert_eq!(connected, 1 + 1 + 4 + 38 + 728 + 26704);
}

/// If H is a connected induced subgraph with diameter < 3, its distance
/// matrix is the corresponding principal submatrix of the host's: with
/// diameter below 3, a host shortcut through outside vertices would need
/// length 2, which is already realized inside H.
#[test]
fn small_diameter_induced_distances_are_principal_submatrices() {
    for n in 2..=6 {
        for g in labeled_graphs(n).filter(Graph::is_connected) {
            let dg = g.distance_matrix().unwrap();
            for mask in 1u32..1 << n {
                let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                if s.len() < 2 {
                    continue;
                }
                let h = g.induced_subgraph(&s).unwrap();
                if !h.is_connected() {
                    continue;
                }
                let dh = h.distance_matrix().unwrap();
                if dh.max_entry() >= 3 {
                    continue;
                }
                for (i, &vi) in s.iter().enumerate() {
                    for (j, &vj) in s.iter().enumerate() {
                        assert_eq!(
                            dh.get(i, j),
                            dg.get(vi, vj),
                            "induced distances must match principal submatrix"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn join_commutes_and_associates_up_to_isomorphism() {
    let parts = [
        Graph::complete(1).unwrap(),
        Graph::complete(2).unwrap(),
        Graph::path(3).unwrap(),
        Graph::empty(2).unwrap(),
    ];
    for a in &parts {
        for b in &parts {
            assert!(isomorphic(&a.join(b).unwrap(), &b.join(a).unwrap()));
            for c in &parts {
                if a.n() + b.n() + c.n() <= 7 {
                    let left = a.join(b).unwrap().join(c).unwrap();
                    let right = a.join(&b.join(c).unwrap()).unwrap();
                    assert!(isomorphic(&left, &right));
                }
            }
        }
    }
}

#[test]
fn complement_of_c5_is_isomorphic_to_c5() {
    let c5 = Graph::cycle(5).unwrap();
    assert!(isomorphic(&c5, &c5.complement()));
}

fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), bits).prop_map(move |bv| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bv[k] {
                        g.add_edge(i, j).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trip(g in arbitrary_graph(70)) {
        let s = to_graph6(&g);
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn union_edge_count_is_additive(a in arbitrary_graph(8), b in arbitrary_graph(8)) {
        let u = a.disjoint_union(&b).unwrap();
        prop_assert_eq!(u.edge_count(), a.edge_count() + b.edge_count());
        let j = a.join(&b).unwrap();
        prop_assert_eq!(j.edge_count(), a.edge_count() + b.edge_count() + a.n() * b.n());
    }

    #[test]
    fn join_of_nonnull_parts_has_diameter_at_most_2(a in arbitrary_graph(6), b in arbitrary_graph(6)) {
        let j = a.join(&b).unwrap();
        prop_assert!(j.diameter().unwrap() <= 2);
    }

    #[test]
    fn complement_is_involutive(g in arbitrary_graph(12)) {
        prop_assert_eq!(g.complement().complement(), g);
    }
}
