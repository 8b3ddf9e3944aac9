//! Recovering the critical base of a ranked convex geometry from its
//! meet-irreducible family.
//!
//! For each element `j`, the minimal generators of `j` are the minimal
//! transversals of `H_j`, whose edges are the complements of the meets in
//! `j↗`. Restricting `H_j` to `pred(j)` leaves exactly the critical ones.

use std::collections::BTreeSet;

use crate::base::{ClosureOperator, Implication, ImplicationalBase};
use crate::ccm::CcmEngine;
use crate::error::{Error, Result};
use crate::hypergraph::{BergeBackend, DualizationBackend, Hypergraph};
use crate::set::{normalize_family, ElementSet, GroundSet};

/// A duplicate-free family of closed sets, none equal to the ground set,
/// whose intersection-closure is the closure system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeetFamily {
    ground: GroundSet,
    meets: Vec<ElementSet>,
}

impl MeetFamily {
    /// Sorts and deduplicates; rejects the full set and foreign sets.
    pub fn new(ground: GroundSet, mut meets: Vec<ElementSet>) -> Result<Self> {
        for m in &meets {
            ground.check(m)?;
            if m.is_full() {
                return Err(Error::InvalidMeetFamily(
                    "the ground set itself is not meet-irreducible".into(),
                ));
            }
        }
        let before = meets.len();
        normalize_family(&mut meets);
        if meets.len() != before {
            log::warn!("dropped {} duplicate meets", before - meets.len());
        }
        Ok(MeetFamily { ground, meets })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn meets(&self) -> &[ElementSet] {
        &self.meets
    }

    pub fn len(&self) -> usize {
        self.meets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.meets.is_empty()
    }

    pub fn closure_from_meets(&self, s: &ElementSet) -> Result<ElementSet> {
        self.ground.check(s)?;
        Ok(self.close(s))
    }

    fn is_closed(&self, s: &ElementSet) -> bool {
        &self.close(s) == s
    }

    /// Members that are not meet-irreducible in the intersection-closure of
    /// the family, i.e. equal to the intersection of the members strictly
    /// above them.
    pub fn reducible_members(&self) -> Vec<ElementSet> {
        self.meets
            .iter()
            .filter(|m| {
                let mut above = self.ground.full_set();
                for other in &self.meets {
                    if m.is_proper_subset(other) {
                        above.intersect_with(other);
                    }
                }
                &above == *m
            })
            .cloned()
            .collect()
    }
}

impl ClosureOperator for MeetFamily {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Intersection of the ground set with every meet containing `s`.
    fn close(&self, s: &ElementSet) -> ElementSet {
        let mut c = self.ground.full_set();
        for m in &self.meets {
            if s.is_subset(m) {
                c.intersect_with(m);
            }
        }
        c
    }
}

/// `j↗` families indexed by element: each meet goes to the unique `j`
/// with `M ∪ {j}` closed.
pub fn partition_meets(m: &MeetFamily) -> Result<Vec<Vec<ElementSet>>> {
    let n = m.ground.len();
    let mut parts = vec![Vec::new(); n];
    for meet in &m.meets {
        let outside = meet.complement();
        let mut owners = outside.iter().filter(|&j| m.is_closed(&meet.with(j)));
        let owner = owners.next();
        let extra = owners.next();
        match (owner, extra) {
            (Some(j), None) => parts[j].push(meet.clone()),
            (None, _) => {
                return Err(Error::NotConvexGeometry(format!(
                    "meet {{{}}} has no single-element cover",
                    m.ground.format_set(meet)
                )))
            }
            (Some(a), Some(b)) => {
                return Err(Error::NotConvexGeometry(format!(
                    "meet {{{}}} is covered by adding either {} or {}",
                    m.ground.format_set(meet),
                    m.ground.label(a),
                    m.ground.label(b)
                )))
            }
        }
    }
    Ok(parts)
}

/// Elements `a ≠ j` outside some `M ∈ j↗` with `M ∪ {a, j}` closed.
pub fn pred(m: &MeetFamily, j: usize, j_up: &[ElementSet]) -> Result<ElementSet> {
    let n = m.ground.len();
    if j >= n {
        return Err(Error::OutOfRange { index: j, size: n });
    }
    let mut out = ElementSet::empty(n);
    if j_up.is_empty() {
        log::warn!("element {} has an empty j-up family; no generators", m.ground.label(j));
        return Ok(out);
    }
    for meet in j_up {
        m.ground.check(meet)?;
        let with_j = meet.with(j);
        for a in meet.complement().iter() {
            if a != j && !out.contains(a) && m.is_closed(&with_j.with(a)) {
                out.insert(a);
            }
        }
    }
    Ok(out)
}

/// `H_j` with `j` removed from the vertices and from every edge.
pub fn hyper_hj(m: &MeetFamily, j: usize, j_up: &[ElementSet]) -> Result<Hypergraph> {
    if j_up.is_empty() {
        return Err(Error::Precondition(format!(
            "empty j-up family for {}",
            m.ground.label(j)
        )));
    }
    let mut common = m.ground.full_set();
    for meet in j_up {
        m.ground.check(meet)?;
        common.intersect_with(meet);
    }
    let vertices = common.complement().without(j);
    let edges = j_up.iter().map(|meet| meet.complement().without(j)).collect();
    Hypergraph::new(vertices, edges)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SidOptions {
    /// Recompute meets from the output and compare with the input.
    pub verify: bool,
    /// Reject inputs with members that are not meet-irreducible.
    pub strict: bool,
}

/// Per-element view of the pipeline, for inspection and tracing.
#[derive(Clone, Debug)]
pub struct ElementTrace {
    pub element: usize,
    pub j_up: Vec<ElementSet>,
    pub hj: Hypergraph,
    pub pred: ElementSet,
    pub restricted: Hypergraph,
    pub generators: Vec<ElementSet>,
}

/// Fails on the first member that is the intersection of larger members.
pub fn check_strict(m: &MeetFamily) -> Result<()> {
    if let Some(r) = m.reducible_members().first() {
        return Err(Error::InvalidMeetFamily(format!(
            "{{{}}} is the intersection of larger members",
            m.ground.format_set(r)
        )));
    }
    Ok(())
}

/// Per-element traces, in element order, skipping elements with empty `j↗`.
pub fn trace(m: &MeetFamily, backend: &dyn DualizationBackend) -> Result<Vec<ElementTrace>> {
    let parts = partition_meets(m)?;
    let mut traces = Vec::new();
    for (j, j_up) in parts.into_iter().enumerate() {
        if j_up.is_empty() {
            log::info!("no meets in the j-up family of {}", m.ground.label(j));
            continue;
        }
        let p = pred(m, j, &j_up)?;
        let hj = hyper_hj(m, j, &j_up)?;
        let restricted = hj.induced(&p)?;
        let generators = backend.minimal_transversals(&restricted).collect();
        traces.push(ElementTrace {
            element: j,
            j_up,
            hj,
            pred: p,
            restricted,
            generators,
        });
    }
    Ok(traces)
}

/// `Tr(H_j[pred(j)])`: the critical generators of `j`, given `j↗`.
pub fn element_generators(
    m: &MeetFamily,
    j: usize,
    j_up: &[ElementSet],
    backend: &dyn DualizationBackend,
) -> Result<Vec<ElementSet>> {
    if j_up.is_empty() {
        return Ok(Vec::new());
    }
    let p = pred(m, j, j_up)?;
    let restricted = hyper_hj(m, j, j_up)?.induced(&p)?;
    Ok(backend.minimal_transversals(&restricted).collect())
}

/// Streams the critical implications, ordered by conclusion then premise.
/// The partition and `pred` sets are computed up front.
pub fn critical_implications<'a>(
    m: &'a MeetFamily,
    backend: &'a dyn DualizationBackend,
) -> Result<impl Iterator<Item = Implication> + 'a> {
    let parts = partition_meets(m)?;
    let mut prepared = Vec::new();
    for (j, j_up) in parts.into_iter().enumerate() {
        if j_up.is_empty() {
            log::info!("no meets in the j-up family of {}", m.ground.label(j));
            continue;
        }
        let p = pred(m, j, &j_up)?;
        let restricted = hyper_hj(m, j, &j_up)?.induced(&p)?;
        prepared.push((j, restricted));
    }
    Ok(prepared.into_iter().flat_map(move |(j, h)| {
        let gens: Vec<ElementSet> = backend.minimal_transversals(&h).collect();
        gens.into_iter()
            .map(move |a| Implication::new(a, j).expect("transversals of a nonempty edge family are nonempty"))
    }))
}

/// The critical base of the ranked convex geometry whose meet-irreducibles
/// are `m`.
pub fn structure_identification(m: &MeetFamily, options: SidOptions) -> Result<ImplicationalBase> {
    structure_identification_with(m, options, &BergeBackend)
}

pub fn structure_identification_with(
    m: &MeetFamily,
    options: SidOptions,
    backend: &dyn DualizationBackend,
) -> Result<ImplicationalBase> {
    if options.strict {
        check_strict(m)?;
    }
    let imps: Vec<Implication> = critical_implications(m, backend)?.collect();
    let base = ImplicationalBase::new(m.ground.clone(), imps)?;
    if options.verify {
        verify_roundtrip(&base, m)?;
    }
    Ok(base)
}

/// Recomputes the meets of `base` and compares them with `m`.
pub fn verify_roundtrip(base: &ImplicationalBase, m: &MeetFamily) -> Result<()> {
    let engine = CcmEngine::new(base)
        .map_err(|e| Error::VerificationFailed(format!("identified base cannot be enumerated: {e}")))?;
    let recomputed: BTreeSet<ElementSet> = engine.meet_irreducibles().map(|(_, s)| s).collect();
    let given: BTreeSet<ElementSet> = m.meets.iter().cloned().collect();
    if recomputed != given {
        let missing = given.difference(&recomputed).count();
        let extra = recomputed.difference(&given).count();
        return Err(Error::VerificationFailed(format!(
            "meets of the identified base differ from the input ({missing} missing, {extra} extra)"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::tests::{two_branch, unranked_pair};
    use crate::oracle;

    fn meets_of(base: &ImplicationalBase) -> MeetFamily {
        MeetFamily::new(base.ground().clone(), oracle::meets_brute(base).unwrap()).unwrap()
    }

    fn lset(g: &GroundSet, labels: &[&str]) -> ElementSet {
        g.set_of(labels.iter().copied()).unwrap()
    }

    fn chain() -> MeetFamily {
        MeetFamily::new(
            GroundSet::numbered(2),
            vec![ElementSet::empty(2), ElementSet::from_indices(2, [1])],
        )
        .unwrap()
    }

    #[test]
    fn closure_from_meets_examples() {
        let c = chain();
        assert_eq!(
            c.closure_from_meets(&ElementSet::from_indices(2, [0])).unwrap(),
            ElementSet::full(2)
        );
        assert_eq!(
            c.closure_from_meets(&ElementSet::empty(2)).unwrap(),
            ElementSet::empty(2)
        );

        let tb = two_branch();
        let m = meets_of(&tb);
        let g = tb.ground();
        assert_eq!(
            m.closure_from_meets(&lset(g, &["3", "4"])).unwrap(),
            lset(g, &["3", "4", "5", "j"])
        );
        assert!(m.closure_from_meets(&ElementSet::empty(5)).is_err());
    }

    #[test]
    fn full_set_is_not_a_meet() {
        assert!(MeetFamily::new(GroundSet::numbered(2), vec![ElementSet::full(2)]).is_err());
    }

    #[test]
    fn partition_examples() {
        let tb = two_branch();
        let g = tb.ground();
        let parts = partition_meets(&meets_of(&tb)).unwrap();
        assert_eq!(
            parts[5],
            vec![
                lset(g, &["1", "2", "4"]),
                lset(g, &["1", "3", "5"]),
                lset(g, &["2", "3", "5"])
            ]
        );

        let f1 = unranked_pair();
        let parts = partition_meets(&meets_of(&f1)).unwrap();
        assert!(parts[1].contains(&lset(f1.ground(), &["1", "4"])));

        let parts = partition_meets(&chain()).unwrap();
        assert_eq!(parts[1], vec![ElementSet::empty(2)]);
        assert_eq!(parts[0], vec![ElementSet::from_indices(2, [1])]);
    }

    #[test]
    fn partition_rejects_non_geometry() {
        // {∅} on two elements: the cover of ∅ is {1,2}, two elements at once
        let m = MeetFamily::new(GroundSet::numbered(2), vec![ElementSet::empty(2)]).unwrap();
        assert!(matches!(partition_meets(&m), Err(Error::NotConvexGeometry(_))));
    }

    #[test]
    fn two_branch_pipeline() {
        let tb = two_branch();
        let g = tb.ground();
        let m = meets_of(&tb);
        let j = 5;
        let j_up = partition_meets(&m).unwrap()[j].clone();

        let p = pred(&m, j, &j_up).unwrap();
        assert_eq!(p, lset(g, &["4", "5"]));
        // witnesses
        assert!(m.is_closed(&lset(g, &["1", "2", "4", "5", "j"])));
        assert!(!m.is_closed(&lset(g, &["2", "3", "5", "1", "j"])));

        let hj = hyper_hj(&m, j, &j_up).unwrap();
        let mut edges = hj.edges().to_vec();
        edges.sort();
        assert_eq!(
            edges,
            vec![lset(g, &["1", "4"]), lset(g, &["2", "4"]), lset(g, &["3", "5"])]
        );

        let restricted = hj.induced(&p).unwrap();
        assert_eq!(restricted.reduced_edges(), vec![lset(g, &["4"]), lset(g, &["5"])]);
        assert_eq!(
            restricted.minimal_transversals().collect::<Vec<_>>(),
            vec![lset(g, &["4", "5"])]
        );

        let base = structure_identification(&m, SidOptions::default()).unwrap();
        assert!(base
            .implications_into(j)
            .any(|imp| imp.premise() == &lset(g, &["4", "5"])));
    }

    #[test]
    fn chain_hj() {
        let c = chain();
        let hj = hyper_hj(&c, 1, &[ElementSet::empty(2)]).unwrap();
        assert_eq!(hj.edges(), &[ElementSet::from_indices(2, [0])]);
    }

    #[test]
    fn two_branch_roundtrip() {
        let tb = two_branch();
        let opts = SidOptions {
            verify: true,
            strict: true,
        };
        let base = structure_identification(&meets_of(&tb), opts).unwrap();
        assert_eq!(base.implication_set(), tb.implication_set());
    }

    #[test]
    fn one_element_boolean_lattice() {
        let m = MeetFamily::new(GroundSet::numbered(1), vec![ElementSet::empty(1)]).unwrap();
        assert!(structure_identification(&m, SidOptions::default()).unwrap().is_empty());
    }

    #[test]
    fn empty_j_up_yields_empty_pred() {
        assert!(pred(&chain(), 0, &[]).unwrap().is_empty());
        assert!(hyper_hj(&chain(), 0, &[]).is_err());
    }

    #[test]
    fn strict_rejects_reducible_members() {
        // {1} = {1,2} ∩ {1,3}
        let g = GroundSet::numbered(3);
        let m = MeetFamily::new(
            g,
            vec![
                ElementSet::from_indices(3, [0]),
                ElementSet::from_indices(3, [0, 1]),
                ElementSet::from_indices(3, [0, 2]),
            ],
        )
        .unwrap();
        assert_eq!(m.reducible_members(), vec![ElementSet::from_indices(3, [0])]);
        let opts = SidOptions {
            verify: false,
            strict: true,
        };
        assert!(matches!(
            structure_identification(&m, opts),
            Err(Error::InvalidMeetFamily(_))
        ));
    }

    #[test]
    fn verify_catches_wrong_input() {
        // meets of Fig. 1 come from an unranked geometry
        let m = meets_of(&unranked_pair());
        let opts = SidOptions {
            verify: true,
            strict: false,
        };
        assert!(matches!(
            structure_identification(&m, opts),
            Err(Error::VerificationFailed(_))
        ));
    }
}
