mod support;

use proptest::prelude::*;
use raag_paut::day_wade::{decompose_pout, relative_omega, saturate, SpecialFamily};
use raag_paut::presentation::{
    is_raag_shaped, omega_split, paut_like_presentation, pout_presentation, GroupPresentation, OmegaPartition,
    PresentationKind, Relator,
};
use raag_paut::{Error, Graph, VertexSet};

use support::{all_graphs_up_to, arb_graph, has_sil_pair_oracle, relator_holds, relator_text};

fn check_sound(g: &Graph, p: &GroupPresentation) {
    for r in &p.relators {
        assert!(relator_holds(g, p, r), "{:?}: {}", g.edges(), relator_text(p, r));
    }
}

#[test]
fn oracle_rejects_false_relators() {
    let g = Graph::discrete(2);
    let p = paut_like_presentation(&g, &OmegaPartition::standard(&g)).unwrap();
    assert!(p.relators.is_empty());
    assert!(!relator_holds(&g, &p, &Relator::commutator(vec![0], vec![1])));
    let g = Graph::discrete(3);
    let p = paut_like_presentation(&g, &OmegaPartition::standard(&g)).unwrap();
    // c_{2}^{0} against c_{0}^{1}: a dominant pair, which does not commute
    let a = p.generators.iter().position(|c| c.actor == 0 && c.base == VertexSet::singleton(2)).unwrap();
    let b = p.generators.iter().position(|c| c.actor == 1 && c.base == VertexSet::singleton(0)).unwrap();
    assert!(!relator_holds(&g, &p, &Relator::commutator(vec![a], vec![b])));
    assert!(!relator_holds(&g, &p, &Relator::Product { factors: vec![a] }));
}

#[test]
fn paut_and_pout_relators_are_sound() {
    for g in all_graphs_up_to(4) {
        let omega = OmegaPartition::standard(&g);
        check_sound(&g, &paut_like_presentation(&g, &omega).unwrap());
        check_sound(&g, &pout_presentation(&g, &omega).unwrap());
    }
}

#[test]
fn relative_presentations_along_decompositions_are_sound() {
    for g in all_graphs_up_to(4) {
        let root = decompose_pout(&g).unwrap();
        for node in root.nodes() {
            let p = paut_like_presentation(&node.graph, &node.omega).unwrap();
            check_sound(&node.graph, &p);
        }
    }
}

#[test]
fn mccool_generator_counts() {
    for n in 2..=6 {
        let g = Graph::discrete(n);
        let p = paut_like_presentation(&g, &OmegaPartition::standard(&g)).unwrap();
        assert_eq!(p.generator_count(), n * (n - 1));
        assert_eq!(p.kind, PresentationKind::PAut);
        let q = pout_presentation(&g, &OmegaPartition::standard(&g)).unwrap();
        let products = q.relators.iter().filter(|r| matches!(r, Relator::Product { .. })).count();
        assert_eq!(products, n);
    }
}

#[test]
fn shape_matches_sil_pairs_on_six_vertices() {
    for g in all_graphs_up_to(6) {
        let p = paut_like_presentation(&g, &OmegaPartition::standard(&g)).unwrap();
        assert_eq!(is_raag_shaped(&p), !has_sil_pair_oracle(&g), "{:?}", g.edges());
    }
}

#[test]
fn exports_round_trip_through_serde() {
    let g = Graph::path(4);
    let p = paut_like_presentation(&g, &OmegaPartition::standard(&g)).unwrap();
    let v = p.to_json();
    assert_eq!(v["format"], "raag-paut/presentation");
    assert_eq!(v["relators"].as_array().unwrap().len(), p.relators.len());
    let text = p.to_text();
    assert!(text.starts_with("# raag-paut presentation v1\n"));
    let back: GroupPresentation = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
    assert_eq!(back, p);
}

#[test]
fn bad_split_sets_are_rejected() {
    let g = Graph::path(3);
    let omega = OmegaPartition::standard(&g);
    assert!(matches!(omega_split(&g, &omega, VertexSet::EMPTY), Err(Error::Input(_))));
    assert!(matches!(omega_split(&g, &omega, g.vertices()), Err(Error::Input(_))));
    // {0,1} lies in st(1)
    assert!(matches!(omega_split(&g, &omega, VertexSet::from_bits(0b011)), Err(Error::Domain(_))));
}

fn union(blocks: &[VertexSet]) -> VertexSet {
    blocks.iter().fold(VertexSet::EMPTY, |a, &b| a.union(b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn generator_and_relator_invariants(g in arb_graph(7)) {
        let omega = OmegaPartition::standard(&g);
        let p = paut_like_presentation(&g, &omega).unwrap();
        prop_assert_eq!(p.generator_count(), (0..g.vertex_count()).map(|v| g.star_components(v).len()).sum::<usize>());
        prop_assert!(p.generators.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(p.relators.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(p.validate().is_ok());
        let q = pout_presentation(&g, &omega).unwrap();
        prop_assert!(q.validate().is_ok());
        prop_assert!(p.relators.iter().all(|r| q.relators.contains(r)));
    }

    #[test]
    fn split_blocks_cover_the_original(g in arb_graph(7), bits in any::<u64>()) {
        let delta = VertexSet::from_bits(bits).intersection(g.vertices());
        let omega = OmegaPartition::standard(&g);
        let Ok(split) = omega_split(&g, &omega, delta) else { return Ok(()) };
        for v in 0..g.vertex_count() {
            prop_assert_eq!(union(&split.h[v]), union(omega.blocks(v)));
            if delta.contains(v) {
                prop_assert!(split.p[v].iter().all(|b| b.meets(delta)));
                let kept = split.h[v].iter().filter(|b| !b.meets(delta)).count();
                prop_assert_eq!(kept + split.p[v].len(), omega.blocks(v).len());
            } else {
                prop_assert!(split.p[v].is_empty());
                prop_assert_eq!(&split.h[v], omega.blocks(v));
            }
        }
    }

    #[test]
    fn split_along_saturated_members_is_relative_omega(g in arb_graph(6)) {
        let none = SpecialFamily::empty();
        let sat = saturate(&g, &none, &none).unwrap();
        let omega = OmegaPartition::standard(&g);
        for delta in sat.members() {
            let Ok(split) = omega_split(&g, &omega, delta) else { continue };
            let h = split.h_partition(&g).unwrap();
            let expected = relative_omega(&g, &sat, &SpecialFamily::new(&g, [delta]).unwrap()).unwrap();
            prop_assert_eq!(h, expected);
            prop_assert!(split.p_restricted(&g).is_ok());
        }
    }
}
