mod common;

use common::{brute_meet_family, rng};
use geodual::oracle::critical_mingens_brute;
use geodual::oracle::generate::random_ranked_base;
use geodual::sid::{partition_meets, trace, verify_roundtrip};
use geodual::{critical_base, structure_identification, BergeBackend, CcmEngine, ElementSet, MeetFamily, SidOptions};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn meets_to_critical_base(seed in any::<u64>(), n in 1usize..13, levels in 1usize..6) {
        let base = random_ranked_base(&mut rng(seed), n, levels, 30, 3);
        let m = brute_meet_family(&base);
        let opts = SidOptions { verify: true, strict: true };
        let identified = structure_identification(&m, opts).unwrap();
        prop_assert_eq!(identified.implication_set(), critical_base(&base).unwrap().implication_set());
    }

    #[test]
    fn identified_base_reproduces_the_meets(seed in any::<u64>(), n in 1usize..11) {
        let base = random_ranked_base(&mut rng(seed), n, 4, 25, 3);
        let meets: Vec<ElementSet> = CcmEngine::new(&base).unwrap().meet_irreducibles().map(|(_, s)| s).collect();
        let m = MeetFamily::new(base.ground().clone(), meets).unwrap();
        let identified = structure_identification(&m, SidOptions::default()).unwrap();
        prop_assert!(verify_roundtrip(&identified, &m).is_ok());
        let mut again: Vec<ElementSet> = CcmEngine::new(&identified).unwrap().meet_irreducibles().map(|(_, s)| s).collect();
        again.sort();
        prop_assert_eq!(again, m.meets().to_vec());
    }

    #[test]
    fn transversals_are_the_critical_generators(seed in any::<u64>(), n in 1usize..10) {
        let base = random_ranked_base(&mut rng(seed), n, 4, 20, 3);
        let m = brute_meet_family(&base);
        let traces = trace(&m, &BergeBackend).unwrap();
        for j in 0..n {
            let expected = critical_mingens_brute(&base, j).unwrap();
            let mut union = ElementSet::empty(n);
            for a in &expected {
                union.union_with(a);
            }
            match traces.iter().find(|t| t.element == j) {
                Some(t) => {
                    prop_assert_eq!(&t.generators, &expected);
                    prop_assert_eq!(&t.pred, &union);
                }
                None => prop_assert!(expected.is_empty()),
            }
        }
    }

    #[test]
    fn partition_assigns_each_meet_once(seed in any::<u64>(), n in 1usize..11) {
        let base = random_ranked_base(&mut rng(seed), n, 4, 20, 3);
        let m = brute_meet_family(&base);
        let parts = partition_meets(&m).unwrap();
        prop_assert_eq!(parts.iter().map(Vec::len).sum::<usize>(), m.len());
        for (j, j_up) in parts.iter().enumerate() {
            let mut from_ccm: Vec<ElementSet> = CcmEngine::new(&base).unwrap().j_up(j).collect();
            from_ccm.sort();
            prop_assert_eq!(j_up, &from_ccm);
        }
    }
}
