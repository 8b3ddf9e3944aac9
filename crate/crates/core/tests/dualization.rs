mod common;

use common::{brute_meet_family, rng};
use geodual::dualization::dual_of_minus;
use geodual::oracle::generate::{random_antichain, random_distributive_base};
use geodual::oracle::{all_closed_sets, meets_brute};
use geodual::{check_dual, cmi_check, reduce_dual_to_cmi, Antichain, ElementSet};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn reduction_preserves_the_answer(seed in any::<u64>(), n in 1usize..9, dual in any::<bool>()) {
        let mut r = rng(seed);
        let base = random_distributive_base(&mut r, n, 10);
        let closed = all_closed_sets(&base).unwrap();
        let nonempty: Vec<ElementSet> = closed.iter().filter(|c| !c.is_empty()).cloned().collect();
        let minus = Antichain::new(&base, random_antichain(&mut r, &nonempty, 4)).unwrap();
        let target = dual_of_minus(&base, &minus).unwrap();
        let plus_sets = if dual { target.clone() } else { random_antichain(&mut r, &closed, 4) };
        let plus = Antichain::new(&base, plus_sets).unwrap();
        let meets = brute_meet_family(&base);

        let (omega, family) = reduce_dual_to_cmi(&base, &plus, &minus, &meets).unwrap();
        prop_assert_eq!(family.len(), meets.len() + plus.len());
        let expected = check_dual(&base, &plus, &minus).unwrap();
        prop_assert_eq!(expected, plus.sets() == target.as_slice());
        prop_assert_eq!(cmi_check(&omega, &family).unwrap(), expected);

        // meets of Ω through z are the lifted meets; the others are z↗
        let z = n;
        let lift = |s: &ElementSet| ElementSet::from_indices(n + 1, s.iter());
        let omega_meets = meets_brute(&omega).unwrap();
        let (with_z, without_z): (Vec<ElementSet>, Vec<ElementSet>) =
            omega_meets.into_iter().partition(|m| m.contains(z));
        let mut lifted: Vec<ElementSet> = meets.meets().iter().map(|m| lift(m).with(z)).collect();
        lifted.sort();
        prop_assert_eq!(with_z, lifted);
        let mut avoiding: Vec<ElementSet> = target.iter().map(lift).collect();
        avoiding.sort();
        prop_assert_eq!(without_z, avoiding);
    }
}
