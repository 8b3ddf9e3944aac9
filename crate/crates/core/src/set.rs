//! Ground sets and fixed-capacity bitsets over them.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_ELEMENTS: usize = 4096;

const WORD: usize = 64;

/// A finite, labelled ground set. Elements are addressed by their position
/// `0..len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::InvalidGround(format!(
                "{} elements exceeds the supported maximum of {MAX_ELEMENTS}",
                labels.len()
            )));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() || label.chars().any(char::is_whitespace) {
                return Err(Error::InvalidGround(format!("bad label {label:?}")));
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::InvalidGround(format!("duplicate label {label:?}")));
            }
        }
        Ok(GroundSet { labels, index })
    }

    /// Ground set labelled `1..=n`.
    pub fn numbered(n: usize) -> Self {
        GroundSet::new((1..=n).map(|i| i.to_string())).expect("numbered labels are valid")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.len())
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    /// Builds a set from labels, failing on unknown ones.
    pub fn set_of<'a, I>(&self, labels: I) -> Result<ElementSet>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut s = self.empty_set();
        for label in labels {
            let i = self
                .position(label)
                .ok_or_else(|| Error::InvalidGround(format!("unknown element {label:?}")))?;
            s.insert(i);
        }
        Ok(s)
    }

    /// Space-separated labels of `s`, in index order.
    pub fn format_set(&self, s: &ElementSet) -> String {
        s.iter().map(|i| self.label(i)).collect::<Vec<_>>().join(" ")
    }

    pub fn check(&self, s: &ElementSet) -> Result<()> {
        if s.universe() != self.len() {
            return Err(Error::UniverseMismatch {
                expected: self.len(),
                found: s.universe(),
            });
        }
        Ok(())
    }
}

/// A subset of `{0, .., universe - 1}` stored as a bitset.
///
/// Ordering is lexicographic on the increasing sequence of members, so
/// `{0, 1} < {0, 1, 2} < {0, 2} < {1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            universe,
            words: vec![0; universe.div_ceil(WORD)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = ElementSet::empty(universe);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    pub fn singleton(universe: usize, i: usize) -> Self {
        let mut s = ElementSet::empty(universe);
        s.insert(i);
        s
    }

    /// Panics if an index is out of range; see [`ElementSet::try_from_indices`].
    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
        let mut s = ElementSet::empty(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn try_from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Result<Self> {
        let mut s = ElementSet::empty(universe);
        for i in indices {
            if i >= universe {
                return Err(Error::OutOfRange {
                    index: i,
                    size: universe,
                });
            }
            s.insert(i);
        }
        Ok(s)
    }

    /// Set from the low bits of a mask. `universe` must be at most 64.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= WORD);
        let mut s = ElementSet::empty(universe);
        if universe > 0 {
            s.words[0] = mask;
            s.trim();
        }
        s
    }

    /// Low 64 members as a mask.
    pub fn to_mask(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    fn trim(&mut self) {
        let rem = self.universe % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Size of the ground set this set lives in.
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / WORD] & (1 << (i % WORD)) != 0
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.universe, "element {i} outside universe of {}", self.universe);
        let w = &mut self.words[i / WORD];
        let bit = 1 << (i % WORD);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, i: usize) -> bool {
        if i >= self.universe {
            return false;
        }
        let w = &mut self.words[i / WORD];
        let bit = 1 << (i % WORD);
        let present = *w & bit != 0;
        *w &= !bit;
        present
    }

    pub fn with(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.insert(i);
        s
    }

    pub fn without(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.remove(i);
        s
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    fn same_universe(&self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe, "mixing sets over different universes");
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.same_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_superset(&self, other: &Self) -> bool {
        other.is_subset(self)
    }

    pub fn is_proper_subset(&self, other: &Self) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.same_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    pub fn union_with(&mut self, other: &Self) {
        self.same_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.same_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        self.same_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> Self {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        s.trim();
        s
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter()).then(self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * WORD + bit);
            }
            self.word += 1;
            self.current = *self.words.get(self.word)?;
        }
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// Sorts and deduplicates a family in place.
pub fn normalize_family(family: &mut Vec<ElementSet>) {
    family.sort();
    family.dedup();
}

/// Inclusion-minimal members of a family, sorted and deduplicated.
pub fn minimal_sets(mut family: Vec<ElementSet>) -> Vec<ElementSet> {
    normalize_family(&mut family);
    // Any proper subset of a set has no more members, so sorting by size
    // lets each candidate be checked against the kept ones only.
    family.sort_by_key(ElementSet::len);
    let mut kept: Vec<ElementSet> = Vec::with_capacity(family.len());
    for s in family {
        if !kept.iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Inclusion-maximal members of a family, sorted and deduplicated.
pub fn maximal_sets(mut family: Vec<ElementSet>) -> Vec<ElementSet> {
    normalize_family(&mut family);
    family.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut kept: Vec<ElementSet> = Vec::with_capacity(family.len());
    for s in family {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ground_set_rejects_duplicates_and_empty_labels() {
        assert!(GroundSet::new(["a", "b", "a"]).is_err());
        assert!(GroundSet::new(["a", ""]).is_err());
        let g = GroundSet::new(["x", "y"]).unwrap();
        assert_eq!(g.position("y"), Some(1));
        assert_eq!(g.label(0), "x");
    }

    #[test]
    fn set_algebra_across_word_boundary() {
        let a = ElementSet::from_indices(130, [0, 63, 64, 129]);
        let b = ElementSet::from_indices(130, [63, 64, 100]);
        assert_eq!(a.intersection(&b).to_vec(), vec![63, 64]);
        assert_eq!(a.union(&b).len(), 5);
        assert_eq!(a.complement().complement(), a);
        assert_eq!(a.complement().len(), 126);
        assert_eq!(a.union(&b).intersection(&a), a);
        assert!(ElementSet::full(130).is_full());
    }

    #[test]
    fn lexicographic_order() {
        let s = |v: &[usize]| ElementSet::from_indices(5, v.iter().copied());
        let mut v = vec![s(&[1]), s(&[0, 2]), s(&[0, 1, 2]), s(&[0, 1]), s(&[])];
        v.sort();
        assert_eq!(v, vec![s(&[]), s(&[0, 1]), s(&[0, 1, 2]), s(&[0, 2]), s(&[1])]);
    }

    #[test]
    fn minimal_and_maximal_filters() {
        let s = |v: &[usize]| ElementSet::from_indices(4, v.iter().copied());
        let fam = vec![s(&[0, 1]), s(&[0]), s(&[1, 2]), s(&[0, 1, 2]), s(&[0])];
        assert_eq!(minimal_sets(fam.clone()), vec![s(&[0]), s(&[1, 2])]);
        assert_eq!(maximal_sets(fam), vec![s(&[0, 1, 2])]);
    }

    #[test]
    fn out_of_range_is_reported() {
        assert!(matches!(
            ElementSet::try_from_indices(3, [3]),
            Err(Error::OutOfRange { index: 3, size: 3 })
        ));
    }
}
