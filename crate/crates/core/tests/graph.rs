mod support;

use proptest::prelude::*;
use raag_paut::graph::ComponentClass;
use raag_paut::graph::{parse_graph, GraphFormat};
use raag_paut::{Error, Graph, VertexSet};

use support::{
    all_graphs_up_to, arb_graph, clique_counts_oracle, has_sil_pair_oracle, isomorphism_classes, star_condition_oracle,
};

#[test]
fn isomorphism_class_counts() {
    let classes = isomorphism_classes(5);
    let per_size: Vec<usize> = (1..=5).map(|n| classes.iter().filter(|g| g.vertex_count() == n).count()).collect();
    assert_eq!(per_size, [1, 2, 4, 11, 34]);
}

#[test]
fn star_condition_matches_enumeration_on_six_vertices() {
    for g in all_graphs_up_to(6) {
        let sc = g.check_star_condition();
        assert_eq!(sc.holds, star_condition_oracle(&g), "{:?}", g.edges());
        assert_eq!(sc.holds, sc.witness.is_none());
    }
}

#[test]
fn star_witness_is_a_failing_quadruple() {
    for g in all_graphs_up_to(6) {
        let Some(w) = g.check_star_condition().witness else { continue };
        let common = w.iter().fold(g.vertices(), |acc, &x| acc.intersection(g.link(x)));
        let comps = g.induced_components(g.vertices().difference(common)).unwrap();
        let mut hit: Vec<usize> = w.iter().map(|&x| comps.iter().position(|c| c.contains(x)).unwrap()).collect();
        hit.sort();
        hit.dedup();
        assert_eq!(hit.len(), 4);
    }
}

#[test]
fn sil_pairs_match_link_intersection_definition() {
    for g in all_graphs_up_to(6) {
        assert_eq!(!g.find_sil_pairs().is_empty(), has_sil_pair_oracle(&g), "{:?}", g.edges());
    }
}

#[test]
fn clique_polynomials_match_subset_count() {
    for g in all_graphs_up_to(5) {
        assert_eq!(g.clique_polynomial(), clique_counts_oracle(&g));
    }
}

#[test]
fn named_examples() {
    let g = Graph::from_names(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
    assert_eq!(g.clique_polynomial(), [1, 3, 2]);
    let (link, star) = g.neighborhood_of("b").unwrap();
    assert_eq!(g.format_set(link), "{a,c}");
    assert_eq!(g.format_set(star), "{a,b,c}");
    let c = g.classify_components(0, 2).unwrap();
    assert_eq!(c.v_side, vec![(VertexSet::singleton(2), ComponentClass::Dominant { opposite: 2 })]);
    assert!(matches!(g.neighborhood_of("z"), Err(Error::Input(_))));
    assert!(matches!(g.classify_components(0, 1), Err(Error::Domain(_))));
}

#[test]
fn text_and_json_formats_agree() {
    let text = "# square\nvertices: a b c d\na b\nb c\nc d\nd a\n";
    let json = r#"{"vertices": ["a","b","c","d"], "edges": [["a","b"],["b","c"],["c","d"],["d","a"]]}"#;
    let t = parse_graph(text, None).unwrap();
    let j = parse_graph(json, Some(GraphFormat::Json)).unwrap();
    assert_eq!(t, j);
    assert_eq!(t.edge_count(), 4);
}

#[test]
fn malformed_input_names_the_line() {
    let e = parse_graph("a b\nb c d\n", None).unwrap_err();
    assert!(matches!(e, Error::Input(_)));
    assert!(e.to_string().contains("line 2"), "{e}");
    assert!(matches!(parse_graph("a a\n", None), Err(Error::Input(_))));
}

proptest! {
    #[test]
    fn star_components_partition_the_complement(g in arb_graph(8)) {
        for v in 0..g.vertex_count() {
            let comps = g.star_components(v);
            let mut union = VertexSet::EMPTY;
            for &c in &comps {
                prop_assert!(union.is_disjoint(c));
                union = union.union(c);
            }
            prop_assert_eq!(union, g.star_complement(v));
            for (i, &a) in comps.iter().enumerate() {
                for &b in &comps[i + 1..] {
                    for x in a {
                        prop_assert!(b.iter().all(|y| !g.adjacent(x, y)));
                    }
                }
            }
        }
    }

    #[test]
    fn classification_is_a_trichotomy(g in arb_graph(7)) {
        for v in 0..g.vertex_count() {
            for w in 0..g.vertex_count() {
                if v == w || g.adjacent(v, w) {
                    continue;
                }
                let c = g.classify_components(v, w).unwrap();
                let dominant: Vec<VertexSet> =
                    c.v_side.iter().filter(|(_, k)| matches!(k, ComponentClass::Dominant { .. })).map(|(s, _)| *s).collect();
                prop_assert_eq!(dominant.len(), 1);
                prop_assert!(dominant[0].contains(w));
                prop_assert_eq!(c.has_shared(), g.find_sil_pairs().iter().any(|p| (p.v, p.w) == (v.min(w), v.max(w))));
            }
        }
    }

    #[test]
    fn star_condition_on_larger_graphs(g in arb_graph(8)) {
        prop_assert_eq!(g.check_star_condition().holds, star_condition_oracle(&g));
    }

    #[test]
    fn induced_subgraph_keeps_adjacency(g in arb_graph(8), bits in any::<u64>()) {
        let s = VertexSet::from_bits(bits).intersection(g.vertices());
        let (sub, old) = g.induced(s);
        prop_assert_eq!(sub.vertex_count(), s.len());
        for a in 0..sub.vertex_count() {
            for b in 0..sub.vertex_count() {
                prop_assert_eq!(sub.adjacent(a, b), g.adjacent(old[a], old[b]));
            }
        }
    }
}
