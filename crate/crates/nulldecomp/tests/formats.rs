use std::collections::BTreeMap;

use proptest::prelude::*;

use nulldecomp::formats::{
    encode_graph6, export_dot, parse_edge_list, parse_graph6, write_edge_list, ParseError, Role,
};
use nulldecomp_core::{decompose, Graph, VertexId};

fn random_graph() -> impl Strategy<Value = Graph> {
    (0usize..=12).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .zip(bits)
                .filter(|&(_, keep)| keep)
                .map(|(e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in random_graph()) {
        let code = encode_graph6(&g);
        prop_assert_eq!(parse_graph6(&code).unwrap(), g.clone());
        prop_assert_eq!(parse_graph6(&format!(">>graph6<<{code}\n")).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in random_graph()) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}

// 'h' = 63 + 0b101001 sets x(0,1), x(1,2), x(2,3): the path 0-1-2-3.
#[test]
fn graph6_reference_codes() {
    let p4 = parse_graph6("Ch").unwrap();
    assert_eq!(p4.size(), 3);
    for (u, v) in [(0, 1), (1, 2), (2, 3)] {
        assert!(p4.has_edge(VertexId(u), VertexId(v)));
    }
    let k4 = parse_graph6("C~").unwrap();
    assert_eq!(k4.size(), 6);
    let c5 = parse_graph6("Dhc").unwrap();
    assert_eq!(c5.size(), 5);
    assert!(c5.vertices().all(|v| c5.degree(v) == 2));
}

#[test]
fn star_with_tail_edge_list() {
    let t1 = parse_edge_list("0 1\n0 2\n0 3\n0 4\n4 5").unwrap();
    assert_eq!((t1.order(), t1.size()), (6, 5));
    assert!(t1.is_tree());
    assert_eq!(
        parse_edge_list("0 0"),
        Err(ParseError::SelfLoop { line: 1, vertex: 0 })
    );
}

#[test]
fn dot_marks_support_as_boxes() {
    let text = "label 0 v1\nlabel 1 v2\nlabel 2 v3\nlabel 3 v4\nlabel 4 v5\nlabel 5 v6\n\
                v1 v2\nv1 v3\nv1 v4\nv1 v5\nv5 v6\n";
    let t1 = parse_edge_list(text).unwrap();
    let d = decompose(&t1).unwrap();
    let mut roles = BTreeMap::new();
    for &v in &d.supp {
        roles.insert(v, Role::Support);
    }
    for &v in &d.core {
        roles.insert(v, Role::Core);
    }
    for &v in &d.n_forest_vertices {
        roles.insert(v, Role::NVertex);
    }
    let dot = export_dot(&t1, Some(&roles));
    let boxes: Vec<&str> = dot.lines().filter(|l| l.contains("shape=box")).collect();
    assert_eq!(boxes.len(), 3);
    for name in ["v2", "v3", "v4"] {
        assert!(boxes
            .iter()
            .any(|l| l.contains(&format!("label=\"{name}\""))));
    }
    assert!(dot.contains("0 [label=\"v1\", shape=doublecircle];"));
    assert!(dot.contains("5 [label=\"v6\", shape=star];"));
    assert_eq!(dot.matches(" -- ").count(), 5);
}
