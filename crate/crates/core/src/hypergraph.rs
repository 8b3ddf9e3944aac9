//! Hypergraphs, minimal transversals and maximal independent sets.
//!
//! Enumeration goes through [`DualizationBackend`]. The only backend shipped
//! is [`BergeBackend`], which multiplies edges one at a time and keeps the
//! partial family absorption-reduced. It materializes the whole family
//! before yielding, so its streams are lazy but carry no delay bound.

use crate::error::{Error, Result};
use crate::set::{minimal_sets, ElementSet};

/// A vertex set with a family of edges, each a subset of the vertices.
///
/// The raw edge list is kept as given; [`Hypergraph::reduced_edges`] is the
/// absorption-reduced view used for dualization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: ElementSet,
    edges: Vec<ElementSet>,
}

impl Hypergraph {
    pub fn new(vertices: ElementSet, edges: Vec<ElementSet>) -> Result<Self> {
        for e in &edges {
            if e.universe() != vertices.universe() {
                return Err(Error::UniverseMismatch {
                    expected: vertices.universe(),
                    found: e.universe(),
                });
            }
            if !e.is_subset(&vertices) {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {e:?} is not within the vertex set"
                )));
            }
        }
        Ok(Hypergraph { vertices, edges })
    }

    pub fn vertices(&self) -> &ElementSet {
        &self.vertices
    }

    /// Edges as given, duplicates included.
    pub fn edges(&self) -> &[ElementSet] {
        &self.edges
    }

    /// Distinct inclusion-minimal edges, sorted.
    pub fn reduced_edges(&self) -> Vec<ElementSet> {
        minimal_sets(self.edges.clone())
    }

    /// Largest edge size.
    pub fn dimension(&self) -> usize {
        self.edges.iter().map(ElementSet::len).max().unwrap_or(0)
    }

    /// `H[S]`: vertices `S`, edges `E ∩ S`. Empty intersections are kept.
    pub fn induced(&self, s: &ElementSet) -> Result<Hypergraph> {
        if s.universe() != self.vertices.universe() {
            return Err(Error::UniverseMismatch {
                expected: self.vertices.universe(),
                found: s.universe(),
            });
        }
        if !s.is_subset(&self.vertices) {
            return Err(Error::InvalidHypergraph(
                "induced set is not within the vertex set".into(),
            ));
        }
        let edges = self.edges.iter().map(|e| e.intersection(s)).collect();
        Ok(Hypergraph {
            vertices: s.clone(),
            edges,
        })
    }

    pub fn is_transversal(&self, t: &ElementSet) -> bool {
        self.edges.iter().all(|e| e.intersects(t))
    }

    pub fn is_independent(&self, s: &ElementSet) -> bool {
        !self.edges.iter().any(|e| e.is_subset(s))
    }

    /// `Tr(H)` in lexicographic order, using the Berge backend.
    pub fn minimal_transversals(&self) -> Box<dyn Iterator<Item = ElementSet> + '_> {
        BergeBackend.minimal_transversals(self)
    }

    /// `MIS(H)` in lexicographic order, using the Berge backend.
    pub fn maximal_independent_sets(&self) -> Box<dyn Iterator<Item = ElementSet> + '_> {
        BergeBackend.maximal_independent_sets(self)
    }
}

/// An algorithm enumerating minimal transversals.
///
/// Implementations must yield every minimal transversal exactly once, in
/// lexicographic order of their sorted members.
pub trait DualizationBackend: Send + Sync {
    fn minimal_transversals<'h>(&self, h: &'h Hypergraph) -> Box<dyn Iterator<Item = ElementSet> + 'h>;

    /// Complements of the minimal transversals within the vertex set.
    fn maximal_independent_sets<'h>(&self, h: &'h Hypergraph) -> Box<dyn Iterator<Item = ElementSet> + 'h> {
        let mut mis: Vec<ElementSet> = self
            .minimal_transversals(h)
            .map(|t| h.vertices().difference(&t))
            .collect();
        mis.sort();
        Box::new(mis.into_iter())
    }
}

/// Sequential Berge multiplication with absorption after each edge.
#[derive(Clone, Copy, Debug, Default)]
pub struct BergeBackend;

impl BergeBackend {
    pub fn transversal_family(h: &Hypergraph) -> Vec<ElementSet> {
        let universe = h.vertices().universe();
        let mut edges = h.reduced_edges();
        if edges.iter().any(ElementSet::is_empty) {
            return Vec::new();
        }
        // small edges first keeps intermediate families narrow
        edges.sort_by_key(ElementSet::len);
        let mut family = vec![ElementSet::empty(universe)];
        for edge in &edges {
            let mut next = Vec::with_capacity(family.len());
            for t in family {
                if t.intersects(edge) {
                    next.push(t);
                } else {
                    next.extend(edge.iter().map(|v| t.with(v)));
                }
            }
            family = minimal_sets(next);
        }
        family
    }
}

impl DualizationBackend for BergeBackend {
    fn minimal_transversals<'h>(&self, h: &'h Hypergraph) -> Box<dyn Iterator<Item = ElementSet> + 'h> {
        Box::new(BergeBackend::transversal_family(h).into_iter())
    }
}
