//! Minimal generators, the redundancy test and the critical base of an
//! acyclic convex geometry.

use std::collections::{BTreeSet, HashSet};

use crate::base::{ClosureOperator, Implication, ImplicationalBase};
use crate::error::{Error, Result};
use crate::ranking::compute_rank;
use crate::set::ElementSet;

/// `generator` is an inclusion-minimal set implying `target`, with
/// `target ∉ generator`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinimalGenerator {
    pub generator: ElementSet,
    pub target: usize,
}

impl MinimalGenerator {
    /// Checks the minimal-generator invariants against `op`.
    pub fn new<C: ClosureOperator>(op: &C, generator: ElementSet, target: usize) -> Result<Self> {
        op.ground().check(&generator)?;
        if target >= op.ground().len() {
            return Err(Error::OutOfRange {
                index: target,
                size: op.ground().len(),
            });
        }
        if generator.contains(target) || !is_minimal_generator(op, &generator, target) {
            return Err(Error::Precondition(format!(
                "{generator:?} is not a minimal generator of {target}"
            )));
        }
        Ok(MinimalGenerator { generator, target })
    }

    pub fn to_implication(&self) -> Implication {
        Implication::new(self.generator.clone(), self.target).expect("minimal generators are nonempty")
    }
}

pub(crate) fn is_minimal_generator<C: ClosureOperator>(op: &C, a: &ElementSet, b: usize) -> bool {
    !a.contains(b) && op.implies(a, b) && a.iter().all(|x| !op.implies(&a.without(x), b))
}

/// Negation of the redundancy test: no `x ∈ A` such that `φ(A) \ {x, b}`
/// still implies `b`.
pub(crate) fn is_critical_for<C: ClosureOperator>(op: &C, a: &ElementSet, b: usize) -> bool {
    let closed = op.close(a).without(b);
    a.iter().all(|x| !op.implies(&closed.without(x), b))
}

fn require_acyclic_standard(base: &ImplicationalBase) -> Result<()> {
    if !base.is_acyclic() {
        return Err(Error::Cyclic);
    }
    if !base.is_standard() {
        return Err(Error::NotStandard);
    }
    Ok(())
}

/// Whether the minimal generator is redundant, i.e. some `a ∈ A` has
/// `φ(A) \ {a, b}` implying `b`.
pub fn is_redundant(base: &ImplicationalBase, generator: &MinimalGenerator) -> Result<bool> {
    require_acyclic_standard(base)?;
    base.ground().check(&generator.generator)?;
    Ok(!is_critical_for(base, &generator.generator, generator.target))
}

/// Every minimal generator of `b` contained in `within`, sorted.
///
/// Descends from `within` removing one element at a time while `b` stays
/// implied; elements are tried in decreasing index order.
pub fn minimal_generators_within<C: ClosureOperator>(op: &C, within: &ElementSet, b: usize) -> Vec<ElementSet> {
    let start = within.without(b);
    let mut found = BTreeSet::new();
    if !op.implies(&start, b) {
        return Vec::new();
    }
    let mut visited = HashSet::new();
    let mut stack = vec![start];
    while let Some(a) = stack.pop() {
        if !visited.insert(a.clone()) {
            continue;
        }
        let members: Vec<usize> = a.iter().collect();
        let mut minimal = true;
        for &x in members.iter().rev() {
            let smaller = a.without(x);
            if op.implies(&smaller, b) {
                minimal = false;
                if !visited.contains(&smaller) {
                    stack.push(smaller);
                }
            }
        }
        if minimal {
            found.insert(a);
        }
    }
    found.into_iter().collect()
}

/// The unique irredundant base of critical minimal generators, sorted by
/// conclusion then premise.
///
/// Every critical generator of `b` lies inside the premise of some
/// implication into `b`, so it suffices to search each premise.
pub fn critical_base(base: &ImplicationalBase) -> Result<ImplicationalBase> {
    require_acyclic_standard(base)?;
    let mut critical = BTreeSet::new();
    for imp in base.implications() {
        let b = imp.conclusion();
        for a in minimal_generators_within(base, imp.premise(), b) {
            if is_critical_for(base, &a, b) {
                critical.insert(Implication::new(a, b)?);
            }
        }
    }
    ImplicationalBase::new(base.ground().clone(), critical.into_iter().collect())
}

/// Whether the geometry of `base` is ranked, decided on its critical base.
pub fn is_ranked_geometry(base: &ImplicationalBase) -> Result<bool> {
    Ok(compute_rank(&critical_base(base)?).is_ok())
}
