use super::*;

// ---- graph6 oracles -------------------------------------------------------
// "DQc" decoded by hand per the published format (and cross-checked against
// an independent implementation): 5 vertices, edges 02, 04, 13, 34.
// "D?{" decodes to the star K_{1,4} centered at vertex 4.

#[test]
fn graph6_known_strings_decode() {
    let g = parse_graph6("DQc").unwrap();
    assert_eq!(g.n(), 5);
    assert_eq!(g.edges(), vec![(0, 2), (0, 4), (1, 3), (3, 4)]);

    let star = parse_graph6("D?{").unwrap();
    assert_eq!(star.n(), 5);
    assert_eq!(star.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);

    let k2 = parse_graph6("A_").unwrap();
    assert_eq!((k2.n(), k2.edge_count()), (2, 1));
    let co_k2 = parse_graph6("A?").unwrap();
    assert_eq!((co_k2.n(), co_k2.edge_count()), (2, 0));
}

#[test]
fn graph6_known_strings_encode() {
    assert_eq!(to_graph6(&Graph::complete(2).unwrap()), "A_");
    assert_eq!(to_graph6(&Graph::empty(2).unwrap()), "A?");
    let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
    assert_eq!(to_graph6(&g), "DQc");
    assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
}

#[test]
fn graph6_long_header_round_trips() {
    // First order that needs the 126-prefixed header.
    let g = Graph::path(63).unwrap();
    let s = to_graph6(&g);
    assert_eq!(s.as_bytes()[0], 126);
    assert_eq!(parse_graph6(&s).unwrap(), g);
}

#[test]
fn graph6_rejects_malformed_input() {
    assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
    assert!(matches!(parse_graph6("A "), Err(Graph6Error::BadChar { pos: 1, byte: b' ' })));
    // K2 encoding needs one body byte.
    assert_eq!(parse_graph6("A"), Err(Graph6Error::BodyLength { got: 0, expected: 1 }));
    assert_eq!(parse_graph6("A__"), Err(Graph6Error::BodyLength { got: 2, expected: 1 }));
    assert_eq!(parse_graph6("~"), Err(Graph6Error::TruncatedHeader));
    assert_eq!(parse_graph6("?"), Err(Graph6Error::ZeroOrder));
    // n=2 has one adjacency bit; the remaining 5 padding bits must be zero.
    assert_eq!(parse_graph6("AO"), Err(Graph6Error::BadPadding));
}

// ---- constructors ---------------------------------------------------------

#[test]
fn complete_graph_shape() {
    let k1 = Graph::complete(1).unwrap();
    assert_eq!((k1.n(), k1.edge_count()), (1, 0));
    let k3 = Graph::complete(3).unwrap();
    assert_eq!((k3.n(), k3.edge_count()), (3, 3));
    assert_eq!(Graph::complete(0), Err(GraphError::OrderZero));
}

#[test]
fn union_and_join_counts() {
    let k2 = Graph::complete(2).unwrap();
    let two_k2 = k2.disjoint_union(&k2).unwrap();
    assert_eq!((two_k2.n(), two_k2.edge_count()), (4, 2));

    let k5 = Graph::complete(5).unwrap();
    let k1 = Graph::complete(1).unwrap();
    let f = k5.disjoint_union(&k1).unwrap();
    assert_eq!((f.n(), f.edge_count()), (6, 10));
    assert_eq!(f.connected_components().len(), 2);

    // |E(G v H)| = |E(G)| + |E(H)| + n_G * n_H
    let j = k2.join(&two_k2).unwrap();
    assert_eq!(j.edge_count(), 1 + 2 + 2 * 4);
}

#[test]
fn friendship_graph_via_join() {
    // K1 v 2K2: 5 vertices, 2 triangles sharing the apex.
    let k2 = Graph::complete(2).unwrap();
    let f2 = Graph::complete(1).unwrap().join(&k2.disjoint_union(&k2).unwrap()).unwrap();
    assert_eq!((f2.n(), f2.edge_count()), (5, 6));
    assert_eq!(f2.degree(0), 4);
    assert_eq!(f2.diameter().unwrap(), 2);
}

#[test]
fn self_loop_and_range_errors() {
    let mut g = Graph::empty(3).unwrap();
    assert_eq!(g.add_edge(1, 1), Err(GraphError::SelfLoop(1)));
    assert_eq!(g.add_edge(0, 3), Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 }));
}

// ---- distances ------------------------------------------------------------

#[test]
fn path_and_cycle_distance_rows() {
    let d = Graph::path(4).unwrap().distance_matrix().unwrap();
    assert_eq!(d.row(0), &[0, 1, 2, 3]);
    assert_eq!(d.max_entry(), 3);

    let d = Graph::cycle(5).unwrap().distance_matrix().unwrap();
    assert_eq!(d.row(0), &[0, 1, 2, 2, 1]);
    // circulant: every row is a rotation of the first
    for i in 0..5 {
        for j in 0..5 {
            assert_eq!(d.get(i, j), d.get(0, (j + 5 - i) % 5));
        }
    }
}

#[test]
fn complete_distance_is_all_ones() {
    let d = Graph::complete(4).unwrap().distance_matrix().unwrap();
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(d.get(i, j), u16::from(i != j));
        }
    }
    assert_eq!(Graph::complete(5).unwrap().diameter().unwrap(), 1);
}

#[test]
fn disconnected_distance_errors() {
    let g = Graph::empty(3).unwrap();
    assert_eq!(g.distance_matrix().err(), Some(GraphError::Disconnected));
    assert_eq!(g.diameter().err(), Some(GraphError::Disconnected));
}

#[test]
fn join_diameter_at_most_two() {
    // Both factors nonempty: every cross pair is adjacent and every same-side
    // pair shares a cross neighbor.
    let p3 = Graph::path(3).unwrap();
    let e2 = Graph::empty(2).unwrap();
    assert!(p3.join(&e2).unwrap().diameter().unwrap() <= 2);
    assert!(e2.join(&e2).unwrap().diameter().unwrap() <= 2);
}

// ---- complement, components, induced subgraphs ---------------------------

#[test]
fn complement_of_complete_is_empty() {
    let g = Graph::complete(6).unwrap().complement();
    assert_eq!(g.edge_count(), 0);
    assert_eq!(g.connected_components().len(), 6);
}

#[test]
fn complement_of_join_is_union_of_complements() {
    let a = Graph::path(3).unwrap();
    let b = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    let lhs = a.join(&b).unwrap().complement();
    let rhs = a.complement().disjoint_union(&b.complement()).unwrap();
    assert_eq!(lhs, rhs); // labels line up exactly, not just up to isomorphism
}

#[test]
fn component_shapes() {
    let g = Graph::from_edges(5, &[(0, 1), (1, 2)]).unwrap();
    let comps = g.connected_components();
    assert_eq!(comps, vec![vec![0, 1, 2], vec![3], vec![4]]);
    assert!(!g.is_connected());
    assert!(Graph::path(5).unwrap().is_connected());
}

#[test]
fn induced_subgraph_examples() {
    let c5 = Graph::cycle(5).unwrap();
    // four consecutive cycle vertices induce a path
    assert_eq!(c5.induced_subgraph(&[0, 1, 2, 3]).unwrap(), Graph::path(4).unwrap());
    let k5 = Graph::complete(5).unwrap();
    assert_eq!(k5.induced_subgraph(&[1, 3, 4]).unwrap(), Graph::complete(3).unwrap());
    // identity when s = V, regardless of input order
    assert_eq!(c5.induced_subgraph(&[4, 2, 0, 1, 3]).unwrap(), c5);

    assert_eq!(c5.induced_subgraph(&[]), Err(GraphError::EmptyVertexSet));
    assert_eq!(c5.induced_subgraph(&[1, 1]), Err(GraphError::DuplicateVertex(1)));
    assert_eq!(
        c5.induced_subgraph(&[0, 7]),
        Err(GraphError::VertexOutOfRange { vertex: 7, order: 5 })
    );
}
