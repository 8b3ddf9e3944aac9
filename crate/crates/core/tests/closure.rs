mod common;

use common::{all_subsets, brute_meet_family, rng};
use geodual::oracle::generate::{random_acyclic_base, random_ranked_base};
use geodual::oracle::{all_closed_sets, joins_brute};
use geodual::{ClosureOperator, ElementSet};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_is_a_closure_operator(seed in any::<u64>(), n in 1usize..9) {
        let base = random_acyclic_base(&mut rng(seed), n, 12, 3);
        for s in all_subsets(n) {
            let c = base.close(&s);
            prop_assert!(s.is_subset(&c));
            prop_assert_eq!(&base.close(&c), &c);
            prop_assert_eq!(base.is_closed(&s).unwrap(), c == s);
            for x in 0..n {
                prop_assert!(c.is_subset(&base.close(&s.with(x))));
            }
        }
    }

    #[test]
    fn closed_sets_are_intersection_closed(seed in any::<u64>(), n in 1usize..8) {
        let base = random_acyclic_base(&mut rng(seed), n, 10, 3);
        let closed = all_closed_sets(&base).unwrap();
        prop_assert!(closed.contains(&ElementSet::full(n)));
        for a in &closed {
            for b in &closed {
                prop_assert!(closed.binary_search(&a.intersection(b)).is_ok());
            }
        }
    }

    #[test]
    fn meets_reproduce_the_closure(seed in any::<u64>(), n in 1usize..11) {
        let base = random_ranked_base(&mut rng(seed), n, 4, 20, 3);
        let m = brute_meet_family(&base);
        for s in all_subsets(n) {
            prop_assert_eq!(m.closure_from_meets(&s).unwrap(), base.close(&s));
        }
    }

    #[test]
    fn standard_bases_have_singleton_joins(seed in any::<u64>(), n in 1usize..9) {
        let base = random_acyclic_base(&mut rng(seed), n, 12, 3);
        prop_assert!(base.is_standard());
        prop_assert_eq!(joins_brute(&base).unwrap().len(), n);
    }
}

#[test]
fn non_standard_joins_are_reported() {
    // 1 -> 2 and 2 -> 1 make both singletons close to {1, 2}
    let base = geodual::ImplicationalBase::numbered(2, &[(&[1], 2), (&[2], 1)]).unwrap();
    assert!(!base.is_standard());
    assert!(matches!(joins_brute(&base), Err(geodual::Error::NotStandard)));
}
