//! Rank functions: `ρ(a) = ρ(b) + 1` for every premise element `a` of every
//! implication `A → b`.

use std::collections::VecDeque;
use std::fmt;

use crate::base::{ClosureOperator, Implication, ImplicationalBase};
use crate::critical::{is_critical_for, is_minimal_generator};
use crate::error::Result;
use crate::sid::MeetFamily;

/// A rank per ground-set element, each connected component shifted to have
/// minimum rank 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankFunction {
    ranks: Vec<usize>,
}

impl RankFunction {
    pub fn new(ranks: Vec<usize>) -> Self {
        RankFunction { ranks }
    }

    pub fn rank(&self, x: usize) -> usize {
        self.ranks[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn max_rank(&self) -> usize {
        self.ranks.iter().copied().max().unwrap_or(0)
    }
}

/// Proof that no rank function exists: `element` would need both ranks.
///
/// Ranks are relative to the propagation start, which is given rank `|X|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankConflict {
    pub element: usize,
    pub required_ranks: [usize; 2],
    pub witness_implications: [Implication; 2],
    /// Implications along an undirected cycle of the implication graph whose
    /// rank constraints cannot all hold together.
    pub cycle: Vec<Implication>,
}

impl fmt::Display for RankConflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "element {} needs rank {} via {:?} and rank {} via {:?}",
            self.element,
            self.required_ranks[0],
            self.witness_implications[0],
            self.required_ranks[1],
            self.witness_implications[1]
        )
    }
}

impl RankConflict {
    /// Multi-line, label-based rendering.
    pub fn describe(&self, base: &ImplicationalBase) -> String {
        let g = base.ground();
        format!(
            "element {} needs rank {} ({}) and rank {} ({})",
            g.label(self.element),
            self.required_ranks[0],
            self.witness_implications[0].display(g),
            self.required_ranks[1],
            self.witness_implications[1].display(g),
        )
    }
}

/// Implications claimed to be critical minimal generators that admit no
/// rank function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnrankedCertificate {
    pub implications: Vec<Implication>,
}

/// Component-wise BFS over the implication graph. Each component's first
/// vertex starts at rank `|X|`; every neighbour's rank is then forced.
pub fn compute_rank(base: &ImplicationalBase) -> Result<RankFunction, Box<RankConflict>> {
    let n = base.ground().len();
    let imps = base.implications();
    // (neighbour, rank offset relative to this element, implication)
    let mut adjacent: Vec<Vec<(usize, isize, usize)>> = vec![Vec::new(); n];
    for (k, imp) in imps.iter().enumerate() {
        let b = imp.conclusion();
        for a in imp.premise() {
            adjacent[a].push((b, -1, k));
            adjacent[b].push((a, 1, k));
        }
    }

    let mut rank: Vec<Option<usize>> = vec![None; n];
    let mut assigned_by: Vec<Option<usize>> = vec![None; n];
    // BFS tree: (parent, implication joining them)
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut component: Vec<usize> = vec![usize::MAX; n];
    let mut component_min: Vec<usize> = Vec::new();

    for root in 0..n {
        if rank[root].is_some() {
            continue;
        }
        let id = component_min.len();
        component_min.push(n);
        rank[root] = Some(n);
        component[root] = id;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let rx = rank[x].expect("queued vertices are ranked");
            for &(y, offset, k) in &adjacent[x] {
                let required = rx.checked_add_signed(offset).expect("ranks stay positive from |X|");
                if assigned_by[x].is_none() {
                    assigned_by[x] = Some(k);
                }
                match rank[y] {
                    None => {
                        rank[y] = Some(required);
                        assigned_by[y] = Some(k);
                        parent[y] = Some((x, k));
                        component[y] = id;
                        component_min[id] = component_min[id].min(required);
                        queue.push_back(y);
                    }
                    Some(ry) if ry != required => {
                        let earlier = assigned_by[y].unwrap_or(k);
                        return Err(Box::new(RankConflict {
                            element: y,
                            required_ranks: [ry, required],
                            witness_implications: [imps[earlier].clone(), imps[k].clone()],
                            cycle: tree_cycle(&parent, x, y, k)
                                .into_iter()
                                .map(|i| imps[i].clone())
                                .collect(),
                        }));
                    }
                    Some(_) => {}
                }
            }
        }
    }

    let ranks = (0..n)
        .map(|x| rank[x].expect("all ranked") - component_min[component[x]])
        .collect();
    Ok(RankFunction { ranks })
}

/// Implication indices on the cycle closed by the non-tree edge `k`
/// between `x` and `y`, without repeats.
fn tree_cycle(parent: &[Option<(usize, usize)>], x: usize, y: usize, k: usize) -> Vec<usize> {
    let path = |mut v: usize| {
        let mut steps = vec![(v, None)];
        while let Some((p, i)) = parent[v] {
            steps.push((p, Some(i)));
            v = p;
        }
        steps
    };
    let (px, py) = (path(x), path(y));
    let on_x: std::collections::HashSet<usize> = px.iter().map(|&(v, _)| v).collect();
    let meet = py.iter().position(|(v, _)| on_x.contains(v)).expect("same BFS tree");
    let lca = py[meet].0;
    let mut cycle = vec![k];
    for steps in [&px[..], &py[..=meet]] {
        for (v, i) in steps {
            if let Some(i) = i {
                cycle.push(*i);
            }
            if *v == lca {
                break;
            }
        }
    }
    let mut seen = std::collections::HashSet::new();
    cycle.retain(|i| seen.insert(*i));
    cycle
}

pub fn validate_rank(base: &ImplicationalBase, rho: &RankFunction) -> bool {
    rho.len() == base.ground().len()
        && base.implications().iter().all(|imp| {
            let rb = rho.rank(imp.conclusion());
            imp.premise().iter().all(|a| rho.rank(a) == rb + 1)
        })
}

/// Checks a certificate that the geometry given by `meets` is not ranked:
/// every implication must be valid, a minimal generator and critical, and
/// together they must admit no rank function.
pub fn check_unranked_certificate(meets: &MeetFamily, cert: &UnrankedCertificate) -> Result<bool> {
    let ground = meets.ground();
    for imp in &cert.implications {
        ground.check(imp.premise())?;
    }
    if cert.implications.is_empty() || cert.implications.len() > ground.len() {
        return Ok(false);
    }
    for imp in &cert.implications {
        let (a, b) = (imp.premise(), imp.conclusion());
        if !meets.close(a).contains(b) {
            return Ok(false);
        }
        if !is_minimal_generator(meets, a, b) {
            return Ok(false);
        }
        if !is_critical_for(meets, a, b) {
            return Ok(false);
        }
    }
    let sub = ImplicationalBase::new(ground.clone(), cert.implications.clone())?;
    Ok(compute_rank(&sub).is_err())
}
