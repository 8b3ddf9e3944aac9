mod common;

use common::rng;
use geodual::oracle::generate::random_hypergraph;
use geodual::oracle::transversals_brute;
use geodual::{ElementSet, Hypergraph};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn berge_matches_brute_force(seed in any::<u64>(), v in 0usize..11, e in 0usize..13) {
        let h = random_hypergraph(&mut rng(seed), v, e);
        let tr: Vec<ElementSet> = h.minimal_transversals().collect();
        prop_assert_eq!(&tr, &transversals_brute(&h).unwrap());
        for t in &tr {
            prop_assert!(h.is_transversal(t));
            // every member has a private edge
            for x in t {
                prop_assert!(!h.is_transversal(&t.without(x)));
            }
        }
    }

    #[test]
    fn independent_sets_are_complements(seed in any::<u64>(), v in 0usize..11, e in 0usize..13) {
        let h = random_hypergraph(&mut rng(seed), v, e);
        let mis: Vec<ElementSet> = h.maximal_independent_sets().collect();
        let mut from_tr: Vec<ElementSet> = h.minimal_transversals().map(|t| h.vertices().difference(&t)).collect();
        from_tr.sort();
        prop_assert_eq!(&mis, &from_tr);
        for s in &mis {
            prop_assert!(h.is_independent(s));
            for x in h.vertices().difference(s).iter() {
                prop_assert!(!h.is_independent(&s.with(x)));
            }
        }
    }

    #[test]
    fn supersets_of_edges_are_absorbed(seed in any::<u64>(), v in 1usize..9, e in 1usize..8) {
        let mut r = rng(seed);
        let h = random_hypergraph(&mut r, v, e);
        let extra = random_hypergraph(&mut r, v, e);
        let mut edges = h.edges().to_vec();
        for (a, b) in h.edges().iter().zip(extra.edges()) {
            edges.push(a.union(b));
        }
        let widened = Hypergraph::new(h.vertices().clone(), edges).unwrap();
        prop_assert_eq!(
            widened.minimal_transversals().collect::<Vec<_>>(),
            h.minimal_transversals().collect::<Vec<_>>()
        );
    }
}

#[test]
fn output_is_lexicographic() {
    let s = |v: &[usize]| ElementSet::from_indices(6, v.iter().copied());
    let h = Hypergraph::new(s(&[0, 1, 2, 3, 4, 5]), vec![s(&[3, 5]), s(&[2, 4]), s(&[1, 4])]).unwrap();
    let tr: Vec<ElementSet> = h.minimal_transversals().collect();
    assert_eq!(tr, vec![s(&[1, 2, 3]), s(&[1, 2, 5]), s(&[3, 4]), s(&[4, 5])]);
}
