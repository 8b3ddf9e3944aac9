//! Dualization in closure lattices and its reduction to meet-irreducible
//! identification.
//!
//! Everything here is brute force over the closed sets. It is a test
//! harness and instance generator, not a solver.

use std::collections::BTreeSet;

use crate::base::{Implication, ImplicationalBase};
use crate::ccm::CcmEngine;
use crate::error::{Error, Result};
use crate::oracle;
use crate::set::{maximal_sets, ElementSet, GroundSet};
use crate::sid::MeetFamily;

/// Pairwise incomparable closed sets of a base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Antichain {
    sets: Vec<ElementSet>,
}

impl Antichain {
    pub fn new(base: &ImplicationalBase, mut sets: Vec<ElementSet>) -> Result<Self> {
        for s in &sets {
            if !base.is_closed(s)? {
                return Err(Error::InvalidAntichain(format!(
                    "{{{}}} is not closed",
                    base.ground().format_set(s)
                )));
            }
        }
        sets.sort();
        sets.dedup();
        for (i, a) in sets.iter().enumerate() {
            if let Some(b) = sets[i + 1..].iter().find(|b| a.is_subset(b) || b.is_subset(a)) {
                return Err(Error::InvalidAntichain(format!(
                    "{{{}}} and {{{}}} are comparable",
                    base.ground().format_set(a),
                    base.ground().format_set(b)
                )));
            }
        }
        Ok(Antichain { sets })
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// `Max⊆{F closed : A ⊄ F for every A ∈ minus}`.
pub fn dual_of_minus(base: &ImplicationalBase, minus: &Antichain) -> Result<Vec<ElementSet>> {
    let closed = oracle::all_closed_sets(base)?;
    let avoiding = closed
        .into_iter()
        .filter(|f| minus.sets().iter().all(|a| !a.is_subset(f)))
        .collect();
    Ok(maximal_sets(avoiding))
}

/// Whether `plus` and `minus` are dual: the down-set of `plus` and the
/// up-set of `minus` partition the closed sets.
pub fn check_dual(base: &ImplicationalBase, plus: &Antichain, minus: &Antichain) -> Result<bool> {
    Ok(dual_of_minus(base, minus)? == plus.sets())
}

/// `check_dual` evaluated literally: `↓B⁺ ∩ ↑B⁻ = ∅` and `↓B⁺ ∪ ↑B⁻ = C`.
pub fn check_dual_by_partition(base: &ImplicationalBase, plus: &Antichain, minus: &Antichain) -> Result<bool> {
    let closed = oracle::all_closed_sets(base)?;
    Ok(closed.iter().all(|f| {
        let below = plus.sets().iter().any(|p| f.is_subset(p));
        let above = minus.sets().iter().any(|m| m.is_subset(f));
        below != above
    }))
}

fn fresh_label(ground: &GroundSet) -> String {
    let mut label = String::from("z");
    while ground.position(&label).is_some() {
        label.push('\'');
    }
    if label != "z" {
        log::warn!("label z is taken; using {label} for the added element");
    }
    label
}

fn lift(s: &ElementSet, universe: usize) -> ElementSet {
    ElementSet::from_indices(universe, s.iter())
}

/// Builds `Ω = Σ ∪ {A → z : A ∈ B⁻}` on `X ∪ {z}` and
/// `M = {M ∪ {z} : M ∈ meets} ∪ B⁺`.
///
/// `B⁺` and `B⁻` are dual in the lattice of `base` exactly when `M` is the
/// meet-irreducible family of `Ω` (for bases with singleton premises).
pub fn reduce_dual_to_cmi(
    base: &ImplicationalBase,
    plus: &Antichain,
    minus: &Antichain,
    meets: &MeetFamily,
) -> Result<(ImplicationalBase, MeetFamily)> {
    if meets.ground() != base.ground() {
        return Err(Error::GroundMismatch);
    }
    let g = base.ground();
    let n = g.len();
    let mut labels = g.labels().to_vec();
    labels.push(fresh_label(g));
    let ground = GroundSet::new(labels)?;
    let z = n;

    let mut imps: Vec<Implication> = base
        .implications()
        .iter()
        .map(|imp| Implication::new(lift(imp.premise(), n + 1), imp.conclusion()))
        .collect::<Result<_>>()?;
    for a in minus.sets() {
        if a.is_empty() {
            return Err(Error::InvalidAntichain(
                "the empty set in B⁻ cannot become a premise".into(),
            ));
        }
        imps.push(Implication::new(lift(a, n + 1), z)?);
    }
    let omega = ImplicationalBase::new(ground.clone(), imps)?;

    let mut family: Vec<ElementSet> = meets.meets().iter().map(|m| lift(m, n + 1).with(z)).collect();
    family.extend(plus.sets().iter().map(|p| lift(p, n + 1)));
    Ok((omega, MeetFamily::new(ground, family)?))
}

/// Whether `m` is exactly the meet-irreducible family of `base`.
/// Ranked bases go through the enumeration algorithm, others through the
/// brute-force oracle.
pub fn cmi_check(base: &ImplicationalBase, m: &MeetFamily) -> Result<bool> {
    if base.ground() != m.ground() {
        return Err(Error::GroundMismatch);
    }
    let given: BTreeSet<ElementSet> = m.meets().iter().cloned().collect();
    let actual: BTreeSet<ElementSet> = match CcmEngine::new(base) {
        Ok(engine) => engine.meet_irreducibles().map(|(_, s)| s).collect(),
        Err(_) => oracle::meets_brute(base)?.into_iter().collect(),
    };
    Ok(given == actual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::tests::unranked_pair;

    fn s(n: usize, v: &[usize]) -> ElementSet {
        ElementSet::from_indices(n, v.iter().copied())
    }

    fn boolean2() -> ImplicationalBase {
        ImplicationalBase::empty(GroundSet::numbered(2))
    }

    #[test]
    fn boolean_duality() {
        let b = boolean2();
        let minus = Antichain::new(&b, vec![s(2, &[0, 1])]).unwrap();
        let plus = Antichain::new(&b, vec![s(2, &[0]), s(2, &[1])]).unwrap();
        assert!(check_dual(&b, &plus, &minus).unwrap());
        assert!(check_dual_by_partition(&b, &plus, &minus).unwrap());

        let half = Antichain::new(&b, vec![s(2, &[0])]).unwrap();
        assert!(!check_dual(&b, &half, &minus).unwrap());
        assert!(!check_dual_by_partition(&b, &half, &minus).unwrap());
    }

    #[test]
    fn chain_duality() {
        let b = ImplicationalBase::numbered(2, &[(&[1], 2)]).unwrap();
        let minus = Antichain::new(&b, vec![s(2, &[0, 1])]).unwrap();
        let plus = Antichain::new(&b, vec![s(2, &[1])]).unwrap();
        assert!(check_dual(&b, &plus, &minus).unwrap());
    }

    #[test]
    fn antichain_validation() {
        let b = ImplicationalBase::numbered(2, &[(&[1], 2)]).unwrap();
        assert!(Antichain::new(&b, vec![s(2, &[0])]).is_err());
        assert!(Antichain::new(&b, vec![s(2, &[1]), s(2, &[0, 1])]).is_err());
    }

    #[test]
    fn reduction_construction() {
        let b = boolean2();
        let minus = Antichain::new(&b, vec![s(2, &[0, 1])]).unwrap();
        let plus = Antichain::new(&b, vec![s(2, &[0]), s(2, &[1])]).unwrap();
        let meets = MeetFamily::new(b.ground().clone(), vec![s(2, &[0]), s(2, &[1])]).unwrap();
        let (omega, m) = reduce_dual_to_cmi(&b, &plus, &minus, &meets).unwrap();

        assert_eq!(omega.ground().labels(), &["1", "2", "z"]);
        assert_eq!(omega.len(), 1);
        assert_eq!(omega.implications()[0].premise(), &s(3, &[0, 1]));
        assert_eq!(omega.implications()[0].conclusion(), 2);
        let expected: BTreeSet<_> = [s(3, &[0, 2]), s(3, &[1, 2]), s(3, &[0]), s(3, &[1])]
            .into_iter()
            .collect();
        assert_eq!(m.meets().iter().cloned().collect::<BTreeSet<_>>(), expected);
        assert_eq!(m.len(), meets.len() + plus.len());
        assert!(cmi_check(&omega, &m).unwrap());

        let half = Antichain::new(&b, vec![s(2, &[0])]).unwrap();
        let (omega, m) = reduce_dual_to_cmi(&b, &half, &minus, &meets).unwrap();
        assert!(!cmi_check(&omega, &m).unwrap());
        assert!(!check_dual(&b, &half, &minus).unwrap());
    }

    #[test]
    fn z_collision_is_renamed() {
        let g = GroundSet::new(["z", "y"]).unwrap();
        let b = ImplicationalBase::empty(g.clone());
        let minus = Antichain::new(&b, vec![s(2, &[0, 1])]).unwrap();
        let plus = Antichain::new(&b, vec![s(2, &[0]), s(2, &[1])]).unwrap();
        let meets = MeetFamily::new(g, vec![s(2, &[0]), s(2, &[1])]).unwrap();
        let (omega, _) = reduce_dual_to_cmi(&b, &plus, &minus, &meets).unwrap();
        assert_eq!(omega.ground().label(2), "z'");
    }

    #[test]
    fn cmi_examples() {
        let b = unranked_pair();
        let meets = oracle::meets_brute(&b).unwrap();
        let m = MeetFamily::new(b.ground().clone(), meets.clone()).unwrap();
        assert!(cmi_check(&b, &m).unwrap());
        let short = MeetFamily::new(b.ground().clone(), meets[1..].to_vec()).unwrap();
        assert!(!cmi_check(&b, &short).unwrap());
    }
}
