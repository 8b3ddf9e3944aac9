//! Meet-irreducible enumeration from a ranked implicational base.
//!
//! For a ranked set `B` of rank `i`, the maximal closed sets avoiding `B`
//! split according to their rank-`i+1` layer, which ranges over the maximal
//! independent sets of the hypergraph `H_B` (premises of implications into
//! `B`, on the rank-`i+1` layer). Each part is enumerated recursively one
//! rank up, with the unused part of the layer as the new avoided set.

use std::sync::Arc;

use crate::base::ImplicationalBase;
use crate::error::{Error, Result};
use crate::hypergraph::{BergeBackend, DualizationBackend, Hypergraph};
use crate::ranking::{compute_rank, validate_rank, RankFunction};
use crate::set::ElementSet;

static BERGE: BergeBackend = BergeBackend;

/// A set whose members all share `rank`. The rank is explicit so it stays
/// defined for the empty set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankedSet {
    members: ElementSet,
    rank: usize,
}

impl RankedSet {
    pub fn new(members: ElementSet, rank: usize, rho: &RankFunction) -> Result<Self> {
        if members.universe() != rho.len() {
            return Err(Error::UniverseMismatch {
                expected: rho.len(),
                found: members.universe(),
            });
        }
        if let Some(x) = members.iter().find(|&x| rho.rank(x) != rank) {
            return Err(Error::InvalidRankedSet(format!(
                "element {x} has rank {}, not {rank}",
                rho.rank(x)
            )));
        }
        Ok(RankedSet { members, rank })
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

struct Context<'a> {
    base: &'a ImplicationalBase,
    rho: RankFunction,
    // levels[r] = elements of rank r
    levels: Vec<ElementSet>,
    backend: &'a dyn DualizationBackend,
}

impl Context<'_> {
    fn max_rank(&self) -> usize {
        self.levels.len() - 1
    }

    fn level(&self, r: usize) -> ElementSet {
        self.levels
            .get(r)
            .cloned()
            .unwrap_or_else(|| ElementSet::empty(self.base.ground().len()))
    }

    fn hyper_hb(&self, b: &ElementSet, rank: usize) -> Hypergraph {
        let edges = b
            .iter()
            .flat_map(|x| self.base.implications_into(x))
            .map(|imp| imp.premise().clone())
            .collect();
        Hypergraph::new(self.level(rank + 1), edges).expect("premises sit one rank above their conclusion")
    }
}

/// Meet-irreducible enumeration over one ranked base.
///
/// Cheap to clone; the per-element streams can be consumed from different
/// threads.
#[derive(Clone)]
pub struct CcmEngine<'a> {
    ctx: Arc<Context<'a>>,
}

impl<'a> CcmEngine<'a> {
    /// Computes and normalizes a rank function; fails with the conflict if
    /// the base is not ranked.
    pub fn new(base: &'a ImplicationalBase) -> Result<Self> {
        let rho = compute_rank(base).map_err(Error::NotRanked)?;
        Self::with_rank(base, rho, &BERGE)
    }

    pub fn with_rank(
        base: &'a ImplicationalBase,
        rho: RankFunction,
        backend: &'a dyn DualizationBackend,
    ) -> Result<Self> {
        if !validate_rank(base, &rho) {
            return Err(Error::InvalidRank);
        }
        let n = base.ground().len();
        let top = rho.max_rank();
        let mut levels = vec![ElementSet::empty(n); top + 1];
        for x in 0..n {
            levels[rho.rank(x)].insert(x);
        }
        Ok(CcmEngine {
            ctx: Arc::new(Context {
                base,
                rho,
                levels,
                backend,
            }),
        })
    }

    pub fn with_backend(base: &'a ImplicationalBase, backend: &'a dyn DualizationBackend) -> Result<Self> {
        let rho = compute_rank(base).map_err(Error::NotRanked)?;
        Self::with_rank(base, rho, backend)
    }

    pub fn rank_function(&self) -> &RankFunction {
        &self.ctx.rho
    }

    /// `k`, the largest rank.
    pub fn max_rank(&self) -> usize {
        self.ctx.max_rank()
    }

    pub fn hyper_hb(&self, b: &RankedSet) -> Hypergraph {
        self.ctx.hyper_hb(b.members(), b.rank())
    }

    /// Streams every `C ∪ I_{>ρ(B)}` for `I` maximal closed disjoint from `B`.
    /// With `c` the elements of rank at most `ρ(B)` outside `B`, that is
    /// exactly the maximal closed sets disjoint from `B`.
    pub fn rec_enum(&self, b: &RankedSet, c: ElementSet) -> Result<RecEnum<'a>> {
        self.ctx.base.ground().check(&c)?;
        if c.intersects(b.members()) {
            return Err(Error::Precondition("C must be disjoint from B".into()));
        }
        Ok(RecEnum::start(self.ctx.clone(), b.members().clone(), b.rank(), c))
    }

    /// Maximal closed sets disjoint from `b`.
    pub fn maximal_avoiding(&self, b: &RankedSet) -> RecEnum<'a> {
        let c = self.initial_c(b.members(), b.rank());
        RecEnum::start(self.ctx.clone(), b.members().clone(), b.rank(), c)
    }

    fn initial_c(&self, b: &ElementSet, rank: usize) -> ElementSet {
        let mut c = ElementSet::empty(self.ctx.base.ground().len());
        for level in &self.ctx.levels[..=rank.min(self.max_rank())] {
            c.union_with(level);
        }
        c.difference_with(b);
        c
    }

    /// `j↗`: the meet-irreducibles whose unique cover adds `j`.
    pub fn j_up(&self, j: usize) -> RecEnum<'a> {
        let n = self.ctx.base.ground().len();
        let rank = self.ctx.rho.rank(j);
        let b = ElementSet::singleton(n, j);
        let c = self.initial_c(&b, rank);
        RecEnum::start(self.ctx.clone(), b, rank, c)
    }

    /// All meet-irreducibles, grouped by element in index order.
    pub fn meet_irreducibles(&self) -> MeetIrreducibles<'a> {
        MeetIrreducibles {
            engine: self.clone(),
            next_j: 0,
            current: None,
        }
    }
}

struct Frame {
    rank: usize,
    c: ElementSet,
    branches: std::vec::IntoIter<ElementSet>,
}

/// Depth-first stream of one recursion tree.
pub struct RecEnum<'a> {
    ctx: Arc<Context<'a>>,
    stack: Vec<Frame>,
    leaf: Option<ElementSet>,
}

impl<'a> RecEnum<'a> {
    fn start(ctx: Arc<Context<'a>>, b: ElementSet, rank: usize, c: ElementSet) -> Self {
        let mut e = RecEnum {
            ctx,
            stack: Vec::new(),
            leaf: None,
        };
        e.leaf = e.call(&b, rank, c);
        e
    }

    /// One recursive call: a leaf at the top rank, otherwise a new frame.
    fn call(&mut self, b: &ElementSet, rank: usize, c: ElementSet) -> Option<ElementSet> {
        if rank >= self.ctx.max_rank() {
            return Some(c);
        }
        let h = self.ctx.hyper_hb(b, rank);
        let branches: Vec<ElementSet> = self.ctx.backend.maximal_independent_sets(&h).collect();
        self.stack.push(Frame {
            rank,
            c,
            branches: branches.into_iter(),
        });
        None
    }
}

impl Iterator for RecEnum<'_> {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        if let Some(leaf) = self.leaf.take() {
            return Some(leaf);
        }
        loop {
            let frame = self.stack.last_mut()?;
            let Some(s) = frame.branches.next() else {
                self.stack.pop();
                continue;
            };
            let rank = frame.rank + 1;
            let c = frame.c.union(&s);
            let s_hat = self.ctx.level(rank).difference(&s);
            if let Some(out) = self.call(&s_hat, rank, c) {
                return Some(out);
            }
        }
    }
}

/// Stream of `(j, M)` with `M ∈ j↗`, covering every meet-irreducible once.
pub struct MeetIrreducibles<'a> {
    engine: CcmEngine<'a>,
    next_j: usize,
    current: Option<(usize, RecEnum<'a>)>,
}

impl Iterator for MeetIrreducibles<'_> {
    type Item = (usize, ElementSet);

    fn next(&mut self) -> Option<(usize, ElementSet)> {
        loop {
            if let Some((j, stream)) = self.current.as_mut() {
                if let Some(m) = stream.next() {
                    return Some((*j, m));
                }
                self.current = None;
            }
            if self.next_j >= self.engine.ctx.base.ground().len() {
                return None;
            }
            let j = self.next_j;
            self.next_j += 1;
            self.current = Some((j, self.engine.j_up(j)));
        }
    }
}

/// `H_B` for a ranked set under `rho`.
pub fn hyper_hb(base: &ImplicationalBase, rho: &RankFunction, b: &RankedSet) -> Result<Hypergraph> {
    let engine = CcmEngine::with_rank(base, rho.clone(), &BERGE)?;
    Ok(engine.hyper_hb(b))
}

/// Collected form of the recursive enumeration starting from `(b, c)`.
pub fn rec_enum(
    base: &ImplicationalBase,
    rho: &RankFunction,
    b: &RankedSet,
    c: &ElementSet,
) -> Result<Vec<ElementSet>> {
    let engine = CcmEngine::with_rank(base, rho.clone(), &BERGE)?;
    Ok(engine.rec_enum(b, c.clone())?.collect())
}

/// Every meet-irreducible closed set of a ranked base, tagged with the
/// element `j` such that it belongs to `j↗`.
pub fn meet_irreducibles(base: &ImplicationalBase) -> Result<Vec<(usize, ElementSet)>> {
    Ok(CcmEngine::new(base)?.meet_irreducibles().collect())
}
