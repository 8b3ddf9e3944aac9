//! Random instance generators for property tests and the CLI.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::base::{ClosureOperator, Implication, ImplicationalBase};
use crate::hypergraph::Hypergraph;
use crate::ranking::compute_rank;
use crate::set::{ElementSet, GroundSet};

fn random_subset<R: Rng + ?Sized>(rng: &mut R, pool: &[usize], universe: usize, max_size: usize) -> ElementSet {
    let size = rng.gen_range(1..=max_size.min(pool.len()));
    ElementSet::from_indices(universe, pool.choose_multiple(rng, size).copied())
}

/// A ranked base on `n` elements: elements are spread over `levels` ranks
/// and every implication concludes on some rank `i` with a premise drawn
/// from rank `i + 1`. At most `max_implications` before deduplication.
pub fn random_ranked_base<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    levels: usize,
    max_implications: usize,
    max_premise: usize,
) -> ImplicationalBase {
    let levels = levels.max(1);
    let mut by_level: Vec<Vec<usize>> = vec![Vec::new(); levels];
    for x in 0..n {
        by_level[rng.gen_range(0..levels)].push(x);
    }
    let usable: Vec<usize> = (0..levels.saturating_sub(1))
        .filter(|&i| !by_level[i].is_empty() && !by_level[i + 1].is_empty())
        .collect();
    let mut imps = Vec::new();
    if !usable.is_empty() {
        for _ in 0..rng.gen_range(0..=max_implications) {
            let i = *usable.choose(rng).expect("nonempty");
            let b = *by_level[i].choose(rng).expect("nonempty");
            let premise = random_subset(rng, &by_level[i + 1], n, max_premise);
            imps.push(Implication::new(premise, b).expect("premise is on another level"));
        }
    }
    dedup_quiet(GroundSet::numbered(n), imps)
}

/// An acyclic base: premises are drawn from elements earlier in a random
/// topological order than their conclusion. Standardness is checked by
/// rejection (acyclic bases always pass).
pub fn random_acyclic_base<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_implications: usize,
    max_premise: usize,
) -> ImplicationalBase {
    loop {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let mut imps = Vec::new();
        if n >= 2 {
            for _ in 0..rng.gen_range(0..=max_implications) {
                let p = rng.gen_range(1..n);
                let premise = random_subset(rng, &order[..p], n, max_premise);
                imps.push(Implication::new(premise, order[p]).expect("premise precedes conclusion"));
            }
        }
        let base = dedup_quiet(GroundSet::numbered(n), imps);
        if base.is_standard() {
            return base;
        }
    }
}

/// Acyclic base with singleton premises; its lattice is distributive.
pub fn random_distributive_base<R: Rng + ?Sized>(rng: &mut R, n: usize, max_implications: usize) -> ImplicationalBase {
    random_acyclic_base(rng, n, max_implications, 1)
}

/// An acyclic base that admits no rank function.
pub fn random_unranked_base<R: Rng + ?Sized>(rng: &mut R, n: usize, max_implications: usize) -> ImplicationalBase {
    assert!(n >= 3, "unranked bases need at least three elements");
    loop {
        let base = random_acyclic_base(rng, n, max_implications.max(3), 3);
        if compute_rank(&base).is_err() {
            return base;
        }
    }
}

/// Hypergraph on vertices `0..vertices` with up to `max_edges` nonempty
/// random edges.
pub fn random_hypergraph<R: Rng + ?Sized>(rng: &mut R, vertices: usize, max_edges: usize) -> Hypergraph {
    let pool: Vec<usize> = (0..vertices).collect();
    let edges = if vertices == 0 {
        Vec::new()
    } else {
        (0..rng.gen_range(0..=max_edges))
            .map(|_| random_subset(rng, &pool, vertices, vertices))
            .collect()
    };
    Hypergraph::new(ElementSet::full(vertices), edges).expect("edges drawn from the vertices")
}

/// Random antichain drawn from `candidates`, at most `max_size` members.
pub fn random_antichain<R: Rng + ?Sized>(rng: &mut R, candidates: &[ElementSet], max_size: usize) -> Vec<ElementSet> {
    let mut pool: Vec<&ElementSet> = candidates.iter().collect();
    pool.shuffle(rng);
    let target = rng.gen_range(0..=max_size);
    let mut chosen: Vec<ElementSet> = Vec::new();
    for c in pool {
        if chosen.len() >= target {
            break;
        }
        if chosen.iter().all(|d| !c.is_subset(d) && !d.is_subset(c)) {
            chosen.push(c.clone());
        }
    }
    chosen.sort();
    chosen
}

/// An acyclic base equivalent to `base`: entailed implications are added
/// (widened premises and random valid rules) and the order is shuffled.
pub fn perturb_equivalent<R: Rng + ?Sized>(rng: &mut R, base: &ImplicationalBase, extra: usize) -> ImplicationalBase {
    let n = base.ground().len();
    let mut imps = base.implications().to_vec();
    let all: Vec<usize> = (0..n).collect();
    for _ in 0..extra {
        let candidate = if !imps.is_empty() && rng.gen_bool(0.5) {
            let imp = imps.choose(rng).expect("nonempty").clone();
            let x = rng.gen_range(0..n);
            Implication::new(imp.premise().with(x), imp.conclusion()).ok()
        } else if n >= 2 {
            let premise = random_subset(rng, &all, n, 3);
            let closure = base.close(&premise).difference(&premise);
            closure
                .iter()
                .collect::<Vec<_>>()
                .choose(rng)
                .and_then(|&b| Implication::new(premise, b).ok())
        } else {
            None
        };
        if let Some(imp) = candidate {
            imps.push(imp);
            if !dedup_quiet(base.ground().clone(), imps.clone()).is_acyclic() {
                imps.pop();
            }
        }
    }
    imps.shuffle(rng);
    dedup_quiet(base.ground().clone(), imps)
}

fn dedup_quiet(ground: GroundSet, mut imps: Vec<Implication>) -> ImplicationalBase {
    let mut seen = std::collections::HashSet::new();
    imps.retain(|i| seen.insert(i.clone()));
    ImplicationalBase::new(ground, imps).expect("generated implications are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn ranked_bases_are_ranked() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let b = random_ranked_base(&mut rng, 9, 4, 20, 3);
            assert!(compute_rank(&b).is_ok());
        }
    }

    #[test]
    fn acyclic_bases_are_acyclic() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..50 {
            let b = random_acyclic_base(&mut rng, 8, 15, 3);
            assert!(b.is_acyclic() && b.is_standard());
            let d = random_distributive_base(&mut rng, 8, 10);
            assert!(d.dimension() <= 1);
        }
    }

    #[test]
    fn unranked_bases_conflict() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let b = random_unranked_base(&mut rng, 6, 8);
        assert!(compute_rank(&b).is_err() && b.is_acyclic());
    }

    #[test]
    fn perturbation_preserves_equivalence() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..30 {
            let b = random_acyclic_base(&mut rng, 7, 10, 3);
            let p = perturb_equivalent(&mut rng, &b, 6);
            assert!(p.is_acyclic() && p.equivalent(&b).unwrap());
        }
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let a = random_ranked_base(&mut ChaCha8Rng::seed_from_u64(3), 10, 3, 20, 3);
        let b = random_ranked_base(&mut ChaCha8Rng::seed_from_u64(3), 10, 3, 20, 3);
        assert_eq!(a.implications(), b.implications());
    }
}
