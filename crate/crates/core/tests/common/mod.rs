#![allow(dead_code)]

use geodual::{ElementSet, ImplicationalBase, MeetFamily};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Sets over `1..=n` labels of a numbered ground set.
pub fn sets(n: usize, family: &[&[usize]]) -> Vec<ElementSet> {
    let mut out: Vec<ElementSet> = family
        .iter()
        .map(|s| ElementSet::from_indices(n, s.iter().map(|i| i - 1)))
        .collect();
    out.sort();
    out
}

pub fn unranked_pair() -> ImplicationalBase {
    ImplicationalBase::numbered(5, &[(&[4], 1), (&[5], 2), (&[3], 1), (&[3], 2), (&[4, 5], 3)]).unwrap()
}

pub fn two_branch() -> ImplicationalBase {
    geodual::format::parse_imp("elements: 1 2 3 4 5 j\n1 2 -> 4\n3 -> 5\n4 5 -> j\n").unwrap()
}

pub fn uneven_paths() -> ImplicationalBase {
    ImplicationalBase::numbered(5, &[(&[1], 2), (&[1], 3), (&[2], 4), (&[3, 4], 5)]).unwrap()
}

pub fn brute_meet_family(base: &ImplicationalBase) -> MeetFamily {
    MeetFamily::new(base.ground().clone(), geodual::oracle::meets_brute(base).unwrap()).unwrap()
}

/// Every subset of an `n`-element ground set.
pub fn all_subsets(n: usize) -> impl Iterator<Item = ElementSet> {
    (0..1u64 << n).map(move |m| ElementSet::from_mask(n, m))
}
