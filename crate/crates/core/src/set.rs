//! Canonical subsets of a carrier `{0..n-1}`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A sorted, deduplicated subset of `{0..ambient-1}`.
///
/// Two sets are equal exactly when their element arrays are equal, so the
/// derived `Eq`/`Hash` can be used for memoization.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ElementSet {
    elements: Vec<usize>,
    ambient: usize,
}

impl ElementSet {
    /// Builds a canonical set from arbitrary (unsorted, repeated) indices.
    ///
    /// Panics if an index is out of range.
    pub fn new(ambient: usize, elements: impl IntoIterator<Item = usize>) -> Self {
        let mut elements: Vec<usize> = elements.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        if let Some(&last) = elements.last() {
            assert!(last < ambient, "element {last} outside carrier of size {ambient}");
        }
        ElementSet { elements, ambient }
    }

    pub fn empty(ambient: usize) -> Self {
        ElementSet { elements: Vec::new(), ambient }
    }

    /// The set `{0}`.
    pub fn zero(ambient: usize) -> Self {
        ElementSet { elements: vec![0], ambient }
    }

    pub fn full(ambient: usize) -> Self {
        ElementSet { elements: (0..ambient).collect(), ambient }
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        let elements = mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect();
        ElementSet { elements, ambient: mask.len() }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.elements
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True for `{0}`.
    pub fn is_zero(&self) -> bool {
        self.elements == [0]
    }

    pub fn is_full(&self) -> bool {
        self.elements.len() == self.ambient
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements.iter().copied()
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.ambient];
        for &x in &self.elements {
            mask[x] = true;
        }
        mask
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.elements.iter();
        'outer: for x in &self.elements {
            for y in it.by_ref() {
                if y == x {
                    continue 'outer;
                }
                if y > x {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        ElementSet::new(self.ambient, self.iter().chain(other.iter()))
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let elements = self.iter().filter(|&x| other.contains(x)).collect();
        ElementSet { elements, ambient: self.ambient }
    }

    /// Image under a total map of the carrier.
    pub fn image(&self, mapping: &[usize]) -> ElementSet {
        ElementSet::new(mapping.len(), self.iter().map(|x| mapping[x]))
    }

    /// Order used for ideal listings: by size, then lexicographically.
    pub fn size_lex_cmp(&self, other: &ElementSet) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.elements.cmp(&other.elements))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let a = ElementSet::new(6, [4, 2, 2, 0]);
        assert_eq!(a.elements(), &[0, 2, 4]);
        assert_eq!(a, ElementSet::new(6, [0, 4, 2]));
    }

    #[test]
    fn subset_checks() {
        let a = ElementSet::new(8, [0, 3]);
        let b = ElementSet::new(8, [0, 1, 3, 7]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert!(!ElementSet::new(8, [0, 2]).is_subset(&b));
        assert!(ElementSet::empty(8).is_subset(&a));
    }

    #[test]
    fn size_then_lex() {
        let mut v = [
            ElementSet::full(4),
            ElementSet::new(4, [0, 2]),
            ElementSet::zero(4),
            ElementSet::new(4, [0, 1]),
        ];
        v.sort_by(|a, b| a.size_lex_cmp(b));
        assert_eq!(v[0], ElementSet::zero(4));
        assert_eq!(v[1], ElementSet::new(4, [0, 1]));
        assert_eq!(v[3], ElementSet::full(4));
    }

    #[test]
    #[should_panic]
    fn out_of_range_panics() {
        ElementSet::new(3, [3]);
    }
}
