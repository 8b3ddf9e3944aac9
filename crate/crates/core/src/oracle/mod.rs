//! Brute-force reference implementations.
//!
//! These work on 64-bit masks with their own fixpoint closure and share no
//! code with the enumeration algorithms they check. Every entry point is
//! guarded by a ground-set size limit; `GEODUAL_GUARD_OVERRIDE=1` lifts it
//! up to the 63-element mask width.

pub mod generate;

use crate::base::ImplicationalBase;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::ElementSet;

/// Default limit for enumerations over all subsets of the ground set.
pub const SUBSET_GUARD: usize = 20;
/// Default limit on hypergraph vertices for transversal brute force.
pub const TRANSVERSAL_GUARD: usize = 16;
/// Default limit for the exhaustive rank search.
pub const RANK_GUARD: usize = 9;
const MASK_LIMIT: usize = 63;

pub const GUARD_OVERRIDE_VAR: &str = "GEODUAL_GUARD_OVERRIDE";

pub fn guard_overridden() -> bool {
    std::env::var(GUARD_OVERRIDE_VAR).is_ok_and(|v| v == "1")
}

fn guard(size: usize, limit: usize) -> Result<()> {
    let limit = if guard_overridden() { MASK_LIMIT } else { limit };
    if size > limit {
        return Err(Error::GuardExceeded { size, limit });
    }
    Ok(())
}

/// The base as `(premise mask, conclusion bit)` pairs.
struct MaskBase {
    n: usize,
    rules: Vec<(u64, u64)>,
}

impl MaskBase {
    fn new(base: &ImplicationalBase) -> Result<Self> {
        let n = base.ground().len();
        guard(n, SUBSET_GUARD)?;
        let rules = base
            .implications()
            .iter()
            .map(|imp| (imp.premise().to_mask(), 1u64 << imp.conclusion()))
            .collect();
        Ok(MaskBase { n, rules })
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn is_closed(&self, s: u64) -> bool {
        self.rules.iter().all(|&(p, c)| s & c != 0 || p & !s != 0)
    }

    fn closure(&self, mut s: u64) -> u64 {
        loop {
            let before = s;
            for &(p, c) in &self.rules {
                if p & !s == 0 {
                    s |= c;
                }
            }
            if s == before {
                return s;
            }
        }
    }

    fn closed_masks(&self) -> Vec<u64> {
        (0..=self.full()).filter(|&s| self.is_closed(s)).collect()
    }

    fn to_set(&self, mask: u64) -> ElementSet {
        ElementSet::from_mask(self.n, mask)
    }

    fn sorted_sets(&self, masks: impl IntoIterator<Item = u64>) -> Vec<ElementSet> {
        let mut out: Vec<ElementSet> = masks.into_iter().map(|m| self.to_set(m)).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Minimal closed sets strictly above a closed `m`.
    fn upper_covers(&self, m: u64) -> Vec<u64> {
        let mut candidates: Vec<u64> = (0..self.n)
            .filter(|x| m & (1 << x) == 0)
            .map(|x| self.closure(m | 1 << x))
            .collect();
        candidates.sort_unstable();
        candidates.dedup();
        candidates
            .iter()
            .copied()
            .filter(|&c| !candidates.iter().any(|&d| d != c && d & !c == 0))
            .collect()
    }
}

/// Every closed set of the base, sorted.
pub fn all_closed_sets(base: &ImplicationalBase) -> Result<Vec<ElementSet>> {
    let mb = MaskBase::new(base)?;
    Ok(mb.sorted_sets(mb.closed_masks()))
}

/// Closed sets other than the ground set with exactly one upper cover.
pub fn meets_brute(base: &ImplicationalBase) -> Result<Vec<ElementSet>> {
    let mb = MaskBase::new(base)?;
    let full = mb.full();
    let meets = mb
        .closed_masks()
        .into_iter()
        .filter(|&m| m != full && mb.upper_covers(m).len() == 1);
    Ok(mb.sorted_sets(meets))
}

/// Closures of singletons, checked against the closed sets with exactly one
/// lower cover. The two agree exactly when the space is standard.
pub fn joins_brute(base: &ImplicationalBase) -> Result<Vec<ElementSet>> {
    let mb = MaskBase::new(base)?;
    let by_singletons: Vec<u64> = (0..mb.n).map(|j| mb.closure(1 << j)).collect();
    let closed = mb.closed_masks();
    let by_covers = closed.iter().copied().filter(|&j| {
        if j == 0 {
            return false;
        }
        let below: Vec<u64> = closed.iter().copied().filter(|&c| c != j && c & !j == 0).collect();
        let lower_covers = below
            .iter()
            .filter(|&&c| !below.iter().any(|&d| d != c && c & !d == 0))
            .count();
        lower_covers == 1
    });
    let from_singletons = mb.sorted_sets(by_singletons);
    let from_covers = mb.sorted_sets(by_covers);
    if from_singletons != from_covers || from_singletons.len() != mb.n {
        return Err(Error::NotStandard);
    }
    Ok(from_singletons)
}

/// All inclusion-minimal `A` with `b ∉ A` and `b` in the closure of `A`.
pub fn mingens_brute(base: &ImplicationalBase, b: usize) -> Result<Vec<ElementSet>> {
    let mb = MaskBase::new(base)?;
    if b >= mb.n {
        return Err(Error::OutOfRange { index: b, size: mb.n });
    }
    let bit = 1u64 << b;
    let generates = |a: u64| mb.closure(a) & bit != 0;
    let gens = (0..=mb.full())
        .filter(|&a| a & bit == 0 && generates(a) && (0..mb.n).all(|x| a & (1 << x) == 0 || !generates(a & !(1 << x))));
    Ok(mb.sorted_sets(gens))
}

/// Exhaustive minimal transversals over the hypergraph's vertex set.
pub fn transversals_brute(h: &Hypergraph) -> Result<Vec<ElementSet>> {
    let vertices: Vec<usize> = h.vertices().iter().collect();
    let k = vertices.len();
    guard(k, TRANSVERSAL_GUARD)?;
    let universe = h.vertices().universe();
    // edges re-encoded over vertex positions
    let edges: Vec<u64> = h
        .edges()
        .iter()
        .map(|e| {
            vertices
                .iter()
                .enumerate()
                .filter(|(_, &v)| e.contains(v))
                .fold(0u64, |m, (i, _)| m | 1 << i)
        })
        .collect();
    let hits = |t: u64| edges.iter().all(|&e| e & t != 0);
    let top = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let mut out: Vec<ElementSet> = (0..=top)
        .filter(|&t| hits(t) && (0..k).all(|i| t & (1 << i) == 0 || !hits(t & !(1 << i))))
        .map(|t| ElementSet::from_indices(universe, (0..k).filter(|i| t & (1 << i) != 0).map(|i| vertices[i])))
        .collect();
    out.sort();
    Ok(out)
}

/// Closed sets disjoint from `b` that are maximal with that property.
pub fn maximal_avoiding_brute(base: &ImplicationalBase, b: &ElementSet) -> Result<Vec<ElementSet>> {
    let mb = MaskBase::new(base)?;
    let bm = b.to_mask();
    let disjoint: Vec<u64> = mb.closed_masks().into_iter().filter(|&c| c & bm == 0).collect();
    let maximal = disjoint
        .iter()
        .copied()
        .filter(|&c| !disjoint.iter().any(|&d| d != c && c & !d == 0));
    Ok(mb.sorted_sets(maximal))
}

/// Critical minimal generators of `b`: those whose closure contains no
/// other minimal generator of `b`.
pub fn critical_mingens_brute(base: &ImplicationalBase, b: usize) -> Result<Vec<ElementSet>> {
    let mb = MaskBase::new(base)?;
    let gens: Vec<u64> = mingens_brute(base, b)?.iter().map(ElementSet::to_mask).collect();
    let critical = gens.iter().copied().filter(|&a| {
        let closed = mb.closure(a);
        !gens.iter().any(|&other| other != a && other & !closed == 0)
    });
    Ok(mb.sorted_sets(critical))
}

/// Whether any rank function exists, by backtracking over every
/// assignment of values `0..n` to the elements.
pub fn rank_exists_brute(base: &ImplicationalBase) -> Result<bool> {
    let n = base.ground().len();
    guard(n, RANK_GUARD)?;
    let pairs: Vec<(usize, usize)> = base
        .implications()
        .iter()
        .flat_map(|imp| imp.premise().iter().map(move |a| (a, imp.conclusion())))
        .collect();
    let mut ranks = vec![0usize; n];
    Ok(assign_ranks(&pairs, &mut ranks, 0))
}

fn assign_ranks(pairs: &[(usize, usize)], ranks: &mut [usize], next: usize) -> bool {
    let n = ranks.len();
    if next == n {
        return true;
    }
    for value in 0..n {
        ranks[next] = value;
        // only pairs whose endpoints are both assigned
        let consistent = pairs
            .iter()
            .filter(|&&(a, b)| a <= next && b <= next && (a == next || b == next))
            .all(|&(a, b)| ranks[a] == ranks[b] + 1);
        if consistent && assign_ranks(pairs, ranks, next + 1) {
            return true;
        }
    }
    false
}
