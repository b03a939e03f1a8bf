use onefaced::atlas::enumerate_classes;
use onefaced::canonical::canonicalize;
use onefaced::families::{chain_x, chain_y, is_necklace, necklace, s_lower_bound, signature};
use onefaced::graph::{build_hat_graph, build_surgery_graph, neighbors, EdgeKind, SurgeryGraph};
use onefaced::moves::{find_torus_blocks, split_torus_summand};
use onefaced::{Error, GluingPattern};

#[test]
fn neighbor_relation_is_symmetric() {
    for g in 2..=3 {
        let classes = enumerate_classes(g).unwrap();
        let nbrs: Vec<_> = classes.iter().map(|r| neighbors(&r.pattern())).collect();
        for (a, ra) in classes.iter().enumerate() {
            assert!(!nbrs[a].contains(&ra.class), "no self-loops");
            for c in &nbrs[a] {
                let b = classes.iter().position(|r| r.class.word == c.word).unwrap();
                assert!(nbrs[b].contains(&ra.class));
            }
        }
    }
}

#[test]
fn regression_constants() {
    let k2 = build_surgery_graph(2).unwrap();
    let k3 = build_surgery_graph(3).unwrap();
    assert_eq!((k2.node_count(), k2.edge_count()), (6, 7));
    assert_eq!((k3.node_count(), k3.edge_count()), (510, 5283));
    assert_eq!(k2.diameter(2).unwrap(), 3);
    assert_eq!(k3.diameter(3).unwrap(), 6);
    assert!(k2.diameter(2).unwrap() <= 18 && k3.diameter(3).unwrap() <= 42);
}

#[test]
fn graph_levels_and_edge_kinds() {
    let h = build_hat_graph(3).unwrap();
    assert_eq!(h.node_count(), 1 + 6 + 510);
    for e in &h.edges {
        let (a, b) = (&h.nodes[e.source], &h.nodes[e.target]);
        match e.kind {
            EdgeKind::Surgery => assert_eq!(a.genus, b.genus),
            EdgeKind::Sum => assert_eq!(a.genus.abs_diff(b.genus), 1),
        }
    }
    assert!(h.is_connected());
    assert_eq!(h.level(2).len(), 6);
    // K-hat restricted to a level is K
    assert_eq!(h.diameter(3).unwrap(), 6);
}

#[test]
fn sum_edges_split_back() {
    let h = build_hat_graph(3).unwrap();
    for e in h.edges.iter().filter(|e| e.kind == EdgeKind::Sum) {
        let (low, high) = (&h.nodes[e.source], &h.nodes[e.target]);
        let (low, high) = if low.genus < high.genus { (low, high) } else { (high, low) };
        let p = high.pattern();
        let recovered = find_torus_blocks(&p)
            .into_iter()
            .any(|q| canonicalize(&split_torus_summand(&p, q).unwrap().pattern).word == low.word);
        assert!(recovered, "{}", high.word_string());
    }
}

#[test]
fn genus_two_classes_touch_the_torus_iff_they_split() {
    let h = build_hat_graph(2).unwrap();
    let torus = h.index_of(&[1, 2, -1, -2]).unwrap();
    for v in h.level(2) {
        let has_sum_edge = h.edges.iter().any(|e| e.kind == EdgeKind::Sum && (e.source == torus && e.target == v));
        let splits = !find_torus_blocks(&h.nodes[v].pattern()).is_empty();
        assert_eq!(has_sum_edge, splits);
    }
}

#[test]
fn distances_dominate_the_s_bound() {
    for g in 2..=3 {
        let k = build_surgery_graph(g).unwrap();
        let rows = k.level_distances(g).unwrap();
        let ps: Vec<GluingPattern> = k.nodes.iter().map(|c| c.pattern()).collect();
        for a in 0..ps.len() {
            for b in 0..ps.len() {
                assert!(rows[a][b] as f64 >= s_lower_bound(&ps[a], &ps[b]));
            }
        }
    }
}

#[test]
fn disconnected_levels_are_reported() {
    let mut k = build_surgery_graph(2).unwrap();
    k.edges.clear();
    assert_eq!(k.diameter(2), Err(Error::Disconnected(2)));
    assert!(!k.is_connected());
    assert_eq!(SurgeryGraph::default().diameter(5), Err(Error::Disconnected(5)));
}

#[test]
fn dot_export_is_stable() {
    let a = build_surgery_graph(3).unwrap().to_dot();
    let b = build_surgery_graph(3).unwrap().to_dot();
    assert_eq!(a, b);
    assert!(a.starts_with("graph surgery {\n"));
    assert_eq!(a.matches(" -- ").count(), 5283);
}

#[test]
fn necklace_signatures() {
    let n2 = necklace(2).unwrap();
    let n3 = necklace(3).unwrap();
    assert_eq!(signature(&n2).one_simple, 2);
    assert_eq!(signature(&n3).one_simple, 3);
    assert_eq!(signature(&n3).max_self_intersections, 2);
    let twos: Vec<_> = enumerate_classes(2).unwrap().into_iter().filter(|r| is_necklace(&r.pattern())).collect();
    assert_eq!(twos.len(), 1);
    assert_eq!(twos[0].class.word, canonicalize(&n2).word);
    // the signature alone does not single out N_3
    let threes = enumerate_classes(3).unwrap().into_iter().filter(|r| is_necklace(&r.pattern())).count();
    assert_eq!(threes, 6);
}

#[test]
fn chain_values_as_computed() {
    // X_2 and Y_2 are both a sum of two tori
    assert_eq!(canonicalize(&chain_x(1).unwrap()), canonicalize(&chain_y(1).unwrap()));
    assert_eq!(signature(&chain_x(1).unwrap()).one_simple, 2);
    for g in 2..=4 {
        let (x, y) = (chain_x(g).unwrap(), chain_y(g).unwrap());
        assert_eq!(x.genus(), 2 * g);
        assert_eq!(y.genus(), 2 * g);
        assert_eq!(signature(&x).one_simple, g);
        assert_eq!(signature(&y).one_simple, g + 1);
    }
    assert!(s_lower_bound(&chain_x(2).unwrap(), &chain_y(2).unwrap()) > 0.0);
}
