//! Unit implicational bases and their closure operator.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::set::{ElementSet, GroundSet};

/// Anything that maps subsets of a ground set to their closure.
pub trait ClosureOperator {
    fn ground(&self) -> &GroundSet;

    /// Closure of `s`. `s` must live in the operator's universe.
    fn close(&self, s: &ElementSet) -> ElementSet;

    fn implies(&self, s: &ElementSet, b: usize) -> bool {
        s.contains(b) || self.close(s).contains(b)
    }
}

/// A unit implication `premise -> conclusion`.
///
/// Ordered by conclusion first, then premise.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Implication {
    conclusion: usize,
    premise: ElementSet,
}

impl Implication {
    /// Rejects empty premises and conclusions inside their own premise.
    pub fn new(premise: ElementSet, conclusion: usize) -> Result<Self> {
        if premise.is_empty() {
            return Err(Error::InvalidImplication("empty premise".into()));
        }
        if conclusion >= premise.universe() {
            return Err(Error::OutOfRange {
                index: conclusion,
                size: premise.universe(),
            });
        }
        if premise.contains(conclusion) {
            return Err(Error::InvalidImplication(format!(
                "conclusion {conclusion} belongs to its own premise"
            )));
        }
        Ok(Implication { conclusion, premise })
    }

    pub fn premise(&self) -> &ElementSet {
        &self.premise
    }

    pub fn conclusion(&self) -> usize {
        self.conclusion
    }

    pub fn display<'a>(&'a self, ground: &'a GroundSet) -> impl fmt::Display + 'a {
        DisplayImplication { imp: self, ground }
    }
}

impl fmt::Debug for Implication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {}", self.premise, self.conclusion)
    }
}

struct DisplayImplication<'a> {
    imp: &'a Implication,
    ground: &'a GroundSet,
}

impl fmt::Display for DisplayImplication<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} -> {}",
            self.ground.format_set(&self.imp.premise),
            self.ground.label(self.imp.conclusion)
        )
    }
}

/// A ground set with a duplicate-free list of unit implications.
#[derive(Clone)]
pub struct ImplicationalBase {
    ground: GroundSet,
    implications: Vec<Implication>,
    // implications whose premise contains a given element
    watchers: Vec<Vec<usize>>,
    // implications concluding a given element
    into: Vec<Vec<usize>>,
}

impl ImplicationalBase {
    /// Duplicates are dropped (first occurrence kept) and reported through
    /// the `log` warning channel.
    pub fn new(ground: GroundSet, implications: Vec<Implication>) -> Result<Self> {
        let n = ground.len();
        let mut seen = HashSet::with_capacity(implications.len());
        let mut kept = Vec::with_capacity(implications.len());
        for imp in implications {
            ground.check(imp.premise())?;
            if !seen.insert(imp.clone()) {
                log::warn!("dropping duplicate implication {}", imp.display(&ground));
                continue;
            }
            kept.push(imp);
        }
        let mut watchers = vec![Vec::new(); n];
        let mut into = vec![Vec::new(); n];
        for (k, imp) in kept.iter().enumerate() {
            for a in imp.premise() {
                watchers[a].push(k);
            }
            into[imp.conclusion()].push(k);
        }
        Ok(ImplicationalBase {
            ground,
            implications: kept,
            watchers,
            into,
        })
    }

    pub fn empty(ground: GroundSet) -> Self {
        ImplicationalBase::new(ground, Vec::new()).expect("empty base is valid")
    }

    /// Builds a base over `1..=n` from `(premise, conclusion)` pairs of labels
    /// given as 1-based numbers. Mostly for tests.
    pub fn numbered(n: usize, rules: &[(&[usize], usize)]) -> Result<Self> {
        let ground = GroundSet::numbered(n);
        let imps = rules
            .iter()
            .map(|(premise, b)| {
                let p = ElementSet::try_from_indices(n, premise.iter().map(|i| i.wrapping_sub(1)))?;
                Implication::new(p, b.wrapping_sub(1))
            })
            .collect::<Result<Vec<_>>>()?;
        ImplicationalBase::new(ground, imps)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn implications(&self) -> &[Implication] {
        &self.implications
    }

    /// Number of implications.
    pub fn len(&self) -> usize {
        self.implications.len()
    }

    pub fn is_empty(&self) -> bool {
        self.implications.is_empty()
    }

    /// Size of the largest premise.
    pub fn dimension(&self) -> usize {
        self.implications.iter().map(|i| i.premise().len()).max().unwrap_or(0)
    }

    /// Implications with conclusion `b`.
    pub fn implications_into(&self, b: usize) -> impl Iterator<Item = &Implication> + '_ {
        self.into[b].iter().map(move |&k| &self.implications[k])
    }

    /// Same base with implications in canonical order.
    pub fn sorted(&self) -> Self {
        let mut imps = self.implications.clone();
        imps.sort();
        ImplicationalBase::new(self.ground.clone(), imps).expect("already validated")
    }

    /// The implications as a set, for order-insensitive comparison.
    pub fn implication_set(&self) -> BTreeSet<Implication> {
        self.implications.iter().cloned().collect()
    }

    pub fn closure(&self, s: &ElementSet) -> Result<ElementSet> {
        self.ground.check(s)?;
        Ok(self.close(s))
    }

    pub fn is_closed(&self, s: &ElementSet) -> Result<bool> {
        self.ground.check(s)?;
        Ok(self.holds_in(s))
    }

    fn holds_in(&self, s: &ElementSet) -> bool {
        self.implications
            .iter()
            .all(|imp| s.contains(imp.conclusion()) || !imp.premise().is_subset(s))
    }

    pub fn implication_graph(&self) -> DirectedGraph {
        let mut arcs = BTreeSet::new();
        for imp in &self.implications {
            for a in imp.premise() {
                arcs.insert((a, imp.conclusion()));
            }
        }
        DirectedGraph {
            vertices: self.ground.len(),
            arcs,
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.implication_graph().is_acyclic()
    }

    pub fn is_standard(&self) -> bool {
        let n = self.ground.len();
        if !self.close(&ElementSet::empty(n)).is_empty() {
            return false;
        }
        (0..n).all(|x| {
            let mut c = self.close(&ElementSet::singleton(n, x));
            c.remove(x);
            self.holds_in(&c)
        })
    }

    /// Whether both bases define the same closed sets.
    pub fn equivalent(&self, other: &ImplicationalBase) -> Result<bool> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch);
        }
        Ok(entails_all(other, self) && entails_all(self, other))
    }

    /// Whether `imp` holds in every closed set.
    pub fn entails(&self, imp: &Implication) -> bool {
        self.close(imp.premise()).contains(imp.conclusion())
    }

    /// Copy of the base without the implication at `index`.
    pub fn without(&self, index: usize) -> Self {
        let mut imps = self.implications.clone();
        imps.remove(index);
        ImplicationalBase::new(self.ground.clone(), imps).expect("already validated")
    }
}

fn entails_all(by: &ImplicationalBase, of: &ImplicationalBase) -> bool {
    of.implications.iter().all(|imp| by.entails(imp))
}

impl ClosureOperator for ImplicationalBase {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Forward chaining with one unsatisfied-premise counter per implication.
    fn close(&self, s: &ElementSet) -> ElementSet {
        debug_assert_eq!(s.universe(), self.ground.len());
        let mut result = s.clone();
        let mut missing: Vec<usize> = self.implications.iter().map(|i| i.premise().len()).collect();
        let mut queue: VecDeque<usize> = s.iter().collect();
        while let Some(x) = queue.pop_front() {
            for &k in &self.watchers[x] {
                missing[k] -= 1;
                if missing[k] == 0 {
                    let b = self.implications[k].conclusion();
                    if result.insert(b) {
                        queue.push_back(b);
                    }
                }
            }
        }
        result
    }
}

impl fmt::Debug for ImplicationalBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.implications.iter().map(|i| i.display(&self.ground).to_string()))
            .finish()
    }
}

/// Digraph on element positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedGraph {
    vertices: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl DirectedGraph {
    pub fn new(vertices: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let arcs: BTreeSet<_> = arcs.into_iter().collect();
        if let Some(&(u, v)) = arcs.iter().find(|(u, v)| *u >= vertices || *v >= vertices) {
            return Err(Error::OutOfRange {
                index: u.max(v),
                size: vertices,
            });
        }
        Ok(DirectedGraph { vertices, arcs })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    /// `x⁻`: vertices with an arc into `x`.
    pub fn predecessors(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.arcs.iter().filter(move |(_, v)| *v == x).map(|(u, _)| *u)
    }

    /// `x⁺`: vertices with an arc from `x`.
    pub fn successors(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.arcs.range((x, 0)..=(x, usize::MAX)).map(|(_, v)| *v)
    }

    /// Kahn's algorithm.
    pub fn is_acyclic(&self) -> bool {
        let mut indegree = vec![0usize; self.vertices];
        let mut out = vec![Vec::new(); self.vertices];
        for &(u, v) in &self.arcs {
            indegree[v] += 1;
            out[u].push(v);
        }
        let mut ready: Vec<usize> = (0..self.vertices).filter(|&v| indegree[v] == 0).collect();
        let mut removed = 0;
        while let Some(u) = ready.pop() {
            removed += 1;
            for &v in &out[u] {
                indegree[v] -= 1;
                if indegree[v] == 0 {
                    ready.push(v);
                }
            }
        }
        removed == self.vertices
    }
}
