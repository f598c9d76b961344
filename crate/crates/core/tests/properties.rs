use planar_turan::canon::canonical_form;
use planar_turan::constructions::disjoint_copies;
use planar_turan::doublestar::{contains_double_star, contains_oracle, is_free, DoubleStarPattern};
use planar_turan::graph6;
use planar_turan::{is_planar, Graph};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let ps = pairs(n);
        prop::collection::vec(any::<bool>(), ps.len()).prop_map(move |mask| {
            let edges: Vec<_> = ps.iter().zip(&mask).filter(|(_, &b)| b).map(|(&e, _)| e).collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

/// Sparse graphs up to the graph6 limit.
fn arb_sparse_graph() -> impl Strategy<Value = Graph> {
    (1usize..=62).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..3 * n).prop_map(move |raw| {
            let edges: Vec<_> = raw.into_iter().filter(|(u, v)| u != v).collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn arb_pattern() -> impl Strategy<Value = DoubleStarPattern> {
    (1usize..=4, 1usize..=4).prop_map(|(m, k)| DoubleStarPattern::new(m, k).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn degree_sum_is_twice_edge_count(g in arb_graph(1, 20)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn triangles_bounded_by_degrees(g in arb_graph(2, 14)) {
        for (x, y) in g.edges() {
            let t = g.triangles_on_edge(x, y).unwrap();
            let d = g.degree(x).unwrap().min(g.degree(y).unwrap());
            prop_assert!(t < d);
        }
    }

    #[test]
    fn graph6_round_trip(g in arb_sparse_graph()) {
        let text = graph6::encode(&g).unwrap();
        prop_assert_eq!(graph6::decode(&text).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip_dense(g in arb_graph(1, 16)) {
        prop_assert_eq!(graph6::decode(&graph6::encode(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn canonical_form_invariant_under_relabelling(g in arb_graph(1, 12), seed in any::<u64>()) {
        let form = canonical_form(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        for _ in 0..100 {
            perm.shuffle(&mut rng);
            prop_assert_eq!(&canonical_form(&g.relabel(&perm).unwrap()), &form);
        }
    }

    #[test]
    fn planarity_survives_edge_deletion(g in arb_graph(5, 11)) {
        if is_planar(&g) {
            for (u, v) in g.edges() {
                prop_assert!(is_planar(&g.without_edge(u, v).unwrap()));
            }
        }
    }

    #[test]
    fn detection_matches_oracle(g in arb_graph(2, 9), p in arb_pattern()) {
        let fast = contains_double_star(&g, p);
        prop_assert_eq!(fast.is_some(), contains_oracle(&g, p));
        if let Some(w) = fast {
            prop_assert_eq!(w.check(&g, p), Ok(()));
        }
    }

    #[test]
    fn freeness_survives_edge_deletion(g in arb_graph(4, 12), p in arb_pattern()) {
        if is_free(&g, p) {
            for (u, v) in g.edges() {
                prop_assert!(is_free(&g.without_edge(u, v).unwrap(), p));
            }
        }
    }

    #[test]
    fn containment_is_monotone_in_pattern(g in arb_graph(4, 12), p in arb_pattern()) {
        if !is_free(&g, p) {
            for m in 1..=p.m() {
                for k in m..=p.k() {
                    prop_assert!(!is_free(&g, DoubleStarPattern::new(m, k).unwrap()));
                }
            }
        }
    }

    #[test]
    fn disjoint_copies_preserve_properties(g in arb_graph(1, 10), copies in 1usize..=5, p in arb_pattern()) {
        let h = disjoint_copies(&g, copies).unwrap();
        prop_assert_eq!(h.vertex_count(), copies * g.vertex_count());
        prop_assert_eq!(h.edge_count(), copies * g.edge_count());
        prop_assert_eq!(is_planar(&h), is_planar(&g));
        prop_assert_eq!(is_free(&h, p), is_free(&g, p));
    }
}
