mod common;

use std::collections::HashMap;

use common::{all_labeled, brute_canonical, graph_and_perm, graphs, permutations};
use inertia_graphs::canon::{are_isomorphic, canonical_form, canonical_labeling};
use inertia_graphs::graph6::{from_graph6, to_graph6};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_form_is_invariant((g, perm) in graph_and_perm(1, 8)) {
        let h = g.permuted(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn canonical_labeling_relabels_to_form(g in graphs(1, 12)) {
        let (form, order) = canonical_labeling(&g);
        prop_assert_eq!(g.permuted(&order).unwrap(), form.to_graph());
    }

    #[test]
    fn rows_stay_symmetric(g in graphs(1, 12)) {
        for u in g.vertices() {
            prop_assert!(!g.has_edge(u, u));
            for v in g.vertices() {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.order() * (g.order() - 1) / 2);
    }

    #[test]
    fn induced_on_everything_is_identity(g in graphs(0, 12)) {
        let all: Vec<usize> = g.vertices().collect();
        prop_assert_eq!(g.induced_subgraph(&all).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip_large(g in graphs(9, 64)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }
}

/// Partition of all labeled graphs by canonical form equals the partition by
/// least adjacency string over every vertex order.
#[test]
fn isomorphism_matches_exhaustive_search() {
    let class_counts = [1, 1, 2, 4, 11, 34, 156];
    for n in 0..=6 {
        let perms = permutations(n);
        let mut by_form: HashMap<_, Vec<bool>> = HashMap::new();
        let mut brute_classes = std::collections::HashSet::new();
        for g in all_labeled(n) {
            let brute = brute_canonical(&g, &perms);
            brute_classes.insert(brute.clone());
            let form = canonical_form(&g);
            let prev = by_form.entry(form).or_insert_with(|| brute.clone());
            assert_eq!(*prev, brute, "form shared by non-isomorphic graphs at n = {n}");
        }
        assert_eq!(by_form.len(), brute_classes.len(), "n = {n}");
        assert_eq!(by_form.len(), class_counts[n], "n = {n}");
    }
}

#[test]
fn isomorphism_verdicts_on_pairs() {
    let perms = permutations(5);
    let graphs: Vec<_> = all_labeled(5).step_by(37).collect();
    for g in &graphs {
        for h in &graphs {
            let expected = brute_canonical(g, &perms) == brute_canonical(h, &perms);
            assert_eq!(are_isomorphic(g, h), expected);
        }
    }
}

#[test]
fn graph6_round_trip_exhaustive() {
    for n in 0..=7 {
        for g in all_labeled(n) {
            assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }
}

#[test]
fn graph6_round_trip_order_eight() {
    use inertia_graphs::graph::Graph;
    let mut word = [0u64; 8];
    for mask in 0u64..1 << 28 {
        word.fill(0);
        let mut k = 0;
        for j in 1..8 {
            for i in 0..j {
                if mask & (1 << k) != 0 {
                    word[i] |= 1 << j;
                    word[j] |= 1 << i;
                }
                k += 1;
            }
        }
        let g = Graph::from_rows(word.to_vec()).unwrap();
        assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }
}
