//! Translation between the two representations of a finite closure system:
//! unit implicational bases and families of meet-irreducible closed sets.
//!
//! For ranked convex geometries both directions reduce to hypergraph
//! dualization:
//!
//! * [`ccm`] enumerates the meet-irreducibles of a ranked base, rank by rank,
//!   through maximal independent sets of small hypergraphs.
//! * [`sid`] rebuilds the critical base from the meet-irreducibles through
//!   minimal transversals.
//!
//! [`oracle`] holds brute-force references used to check both.

pub mod base;
pub mod ccm;
pub mod critical;
pub mod dualization;
pub mod error;
pub mod format;
pub mod hypergraph;
pub mod oracle;
pub mod ranking;
pub mod set;
pub mod sid;

pub use base::{ClosureOperator, DirectedGraph, Implication, ImplicationalBase};
pub use ccm::{CcmEngine, RankedSet};
pub use critical::{critical_base, is_ranked_geometry, is_redundant, MinimalGenerator};
pub use dualization::{check_dual, cmi_check, reduce_dual_to_cmi, Antichain};
pub use error::{Error, Result};
pub use hypergraph::{BergeBackend, DualizationBackend, Hypergraph};
pub use ranking::{
    check_unranked_certificate, compute_rank, validate_rank, RankConflict, RankFunction, UnrankedCertificate,
};
pub use set::{ElementSet, GroundSet};
pub use sid::{structure_identification, MeetFamily, SidOptions};
