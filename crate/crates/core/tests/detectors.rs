mod common;

use common::{all_families, naive_contains, naive_family_contains, random_graph};
use planar_turan::constructions::witness::Witness;
use planar_turan::detectors::{circumference, contains_cycle_k};
use planar_turan::graph::{add_pendant, disjoint_union, join, Graph};
use planar_turan::{FamilyKind, ForbiddenFamily};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), 0.1f64..0.7).prop_map(|(n, seed, p)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_graph(&mut rng, n, p)
    })
}

fn family_strategy(max_k: usize) -> impl Strategy<Value = ForbiddenFamily> {
    prop::sample::select(all_families(max_k))
}

/// Families whose members each contain a member of the other family.
fn implied(f: &ForbiddenFamily) -> Vec<ForbiddenFamily> {
    let k = f.k();
    match f.kind() {
        FamilyKind::Cycle => vec![],
        FamilyKind::CyclePlus | FamilyKind::TwoCycles => vec![ForbiddenFamily::cycle(k)],
        FamilyKind::CycleUnionCyclePlus => vec![ForbiddenFamily::two_cycles(k), ForbiddenFamily::cycle_plus(k)],
        FamilyKind::Theta => vec![ForbiddenFamily::cycle(k)],
        FamilyKind::ThetaPlus => vec![ForbiddenFamily::theta(k), ForbiddenFamily::cycle_plus(k)],
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn agrees_with_subgraph_search(g in graph_strategy(8), family in family_strategy(6)) {
        let found = family.find_in(&g);
        prop_assert_eq!(found.is_some(), naive_family_contains(&g, &family), "{} on {:?}", family, g.edges());
        if let Some(w) = found {
            prop_assert!(w.validate(&g, &family));
        }
    }

    #[test]
    fn containment_is_monotone(g in graph_strategy(10), family in family_strategy(7), u in 0usize..10, v in 0usize..10) {
        let n = g.vertex_count();
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v && !g.has_edge(u, v));
        let bigger = g.with_edges([(u, v)]).unwrap();
        if family.is_contained_in(&g) {
            prop_assert!(family.is_contained_in(&bigger));
        }
        if family.is_free(&bigger) {
            prop_assert!(family.is_free(&g));
        }
    }

    #[test]
    fn stronger_patterns_imply_weaker(g in graph_strategy(11), family in family_strategy(7)) {
        if family.is_contained_in(&g) {
            for weaker in implied(&family) {
                prop_assert!(weaker.is_contained_in(&g), "{} found but {} missing", family, weaker);
            }
        }
    }

    #[test]
    fn witnesses_validate(g in graph_strategy(14), family in family_strategy(8)) {
        if let Some(w) = family.find_in(&g) {
            prop_assert!(w.validate(&g, &family), "{:?}", w);
        }
    }

    #[test]
    fn relabelling_invariant(g in graph_strategy(10), family in family_strategy(6), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = g.vertices().collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(family.is_free(&g), family.is_free(&g.permuted(&perm)));
    }

    #[test]
    fn cycle_detector_matches_subgraph_search(g in graph_strategy(10), len in 3usize..9) {
        let found = contains_cycle_k(&g, len);
        prop_assert_eq!(found.is_some(), naive_contains(&g, &Graph::cycle(len)));
        if let Some(w) = found {
            prop_assert!(w.validate(&g, &ForbiddenFamily::cycle(len)));
        }
    }
}

#[test]
fn cycles_and_pendants() {
    for k in 3..=12 {
        let c = Graph::cycle(k);
        assert!(ForbiddenFamily::cycle(k).is_contained_in(&c));
        assert!(ForbiddenFamily::cycle_plus(k).is_free(&c));
        assert!(ForbiddenFamily::cycle(k + 1).is_free(&c));
        let cp = add_pendant(&c, 0).unwrap();
        assert!(ForbiddenFamily::cycle_plus(k).is_contained_in(&cp));
        let two = disjoint_union(&[c.clone(), c.clone()]);
        assert!(ForbiddenFamily::two_cycles(k).is_contained_in(&two));
        assert!(ForbiddenFamily::cycle_union_cycle_plus(k).is_free(&two));
        let mixed = disjoint_union(&[c.clone(), cp]);
        assert!(ForbiddenFamily::cycle_union_cycle_plus(k).is_contained_in(&mixed));
        assert_eq!(circumference(&c), k);
    }
}

#[test]
fn two_cycles_must_be_disjoint() {
    // two triangles sharing a vertex
    let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
    assert!(ForbiddenFamily::two_cycles(3).is_free(&bowtie));
    assert!(ForbiddenFamily::cycle_plus(3).is_contained_in(&bowtie));
}

#[test]
fn theta_needs_a_chord() {
    assert!(ForbiddenFamily::theta(4).is_free(&Graph::cycle(4)));
    assert!(ForbiddenFamily::theta(4).is_contained_in(&Graph::complete(4)));
    assert!(ForbiddenFamily::theta(4).is_free(&Graph::complete_bipartite(2, 3)));
    assert!(ForbiddenFamily::cycle(4).is_contained_in(&Graph::complete_bipartite(2, 3)));
    // a hexagon with a long chord is a theta on six vertices
    let theta6 = Graph::cycle(6).with_edges([(0, 3)]).unwrap();
    assert!(ForbiddenFamily::theta(6).is_contained_in(&theta6));
    assert!(ForbiddenFamily::theta_plus(6).is_free(&theta6));
    let pendant_at_chord_end = add_pendant(&theta6, 0).unwrap();
    assert!(ForbiddenFamily::theta_plus(6).is_free(&pendant_at_chord_end));
    let pendant_at_degree_two = add_pendant(&theta6, 1).unwrap();
    assert!(ForbiddenFamily::theta_plus(6).is_contained_in(&pendant_at_degree_two));
}

#[test]
fn catalog_graphs() {
    let c4 = ForbiddenFamily::cycle(4);
    for n in 1..=25 {
        let w = Witness::Windmill { n }.build().unwrap();
        assert!(c4.is_free(&w), "windmill {n}");
    }
    let h = Witness::HStar12.build().unwrap();
    assert!(c4.is_free(&h));
    assert!(ForbiddenFamily::cycle(6).is_contained_in(&h));

    let two_k4 = Witness::TwoK4.build().unwrap();
    assert!(c4.is_contained_in(&two_k4));
    assert!(ForbiddenFamily::cycle_plus(4).is_free(&two_k4));
    assert!(ForbiddenFamily::two_cycles(4).is_contained_in(&two_k4));
    assert!(ForbiddenFamily::cycle_union_cycle_plus(4).is_free(&two_k4));
    assert!(ForbiddenFamily::cycle_union_cycle_plus(3).is_contained_in(&two_k4));

    let k2k3 = join(&Graph::complete(2), &Graph::empty(3));
    assert!(ForbiddenFamily::theta(4).is_contained_in(&k2k3));
    assert!(ForbiddenFamily::theta_plus(4).is_free(&k2k3));
    assert!(ForbiddenFamily::theta(4).is_free(&Graph::cycle(6).complement()));
}

#[test]
fn trees_avoid_everything() {
    let path = Graph::path(30);
    let star = Graph::star(30);
    for family in all_families(10) {
        assert!(family.is_free(&path) && family.is_free(&star), "{family}");
    }
}

#[test]
fn family_parameters() {
    assert!(ForbiddenFamily::new(FamilyKind::Theta, 3).is_err());
    assert!(ForbiddenFamily::new(FamilyKind::Cycle, 2).is_err());
    assert_eq!(ForbiddenFamily::theta_plus(5).pattern_order(), 6);
    assert_eq!(ForbiddenFamily::cycle_union_cycle_plus(5).pattern_order(), 11);
    assert_eq!("theta-plus".parse::<FamilyKind>().unwrap(), FamilyKind::ThetaPlus);
}
