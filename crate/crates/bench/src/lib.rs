//! Shared benchmark instances.

use geodual::oracle::generate::{random_acyclic_base, random_ranked_base};
use geodual::ImplicationalBase;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Ranked bases of growing size, fixed seeds.
pub fn ranked_instances() -> Vec<(String, ImplicationalBase)> {
    [(12, 3, 30), (24, 4, 60), (40, 5, 120)]
        .into_iter()
        .map(|(n, levels, imps)| {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            (
                format!("n{n}_k{levels}"),
                random_ranked_base(&mut rng, n, levels, imps, 3),
            )
        })
        .collect()
}

pub fn acyclic_instance(n: usize) -> ImplicationalBase {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacc);
    random_acyclic_base(&mut rng, n, 3 * n, 3)
}
