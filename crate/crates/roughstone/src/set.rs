//! Compact subsets of a fixed finite index universe.
//!
//! Every set in this crate lives inside some ordered universe of `n`
//! elements (the points of an approximation space, the indices of a
//! ternary partition, the classes of an equivalence relation). [`IndexSet`]
//! stores such a subset as a bit vector and carries the universe size with
//! it, so complements are well defined and sets from different universes
//! never compare equal by accident.

use std::fmt;

const WORD_BITS: usize = 64;

/// A subset of `{0, 1, .., n-1}` backed by a bit vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    nbits: usize,
    words: Vec<u64>,
}

impl IndexSet {
    /// The empty subset of a universe with `n` indices.
    pub fn empty(n: usize) -> Self {
        IndexSet {
            nbits: n,
            words: vec![0; n.div_ceil(WORD_BITS)],
        }
    }

    /// The full universe `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for w in &mut s.words {
            *w = !0;
        }
        s.trim();
        s
    }

    /// Builds a set from explicit indices. Panics if an index is out of range.
    pub fn from_indices(n: usize, indices: &[usize]) -> Self {
        let mut s = Self::empty(n);
        for &i in indices {
            s.insert(i);
        }
        s
    }

    /// Interprets the low `n` bits of `mask` as a subset (bit `i` = index `i`).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= WORD_BITS, "mask constructor limited to 64 indices");
        let mut s = Self::empty(n);
        if !s.words.is_empty() {
            s.words[0] = mask;
            s.trim();
        } else {
            assert_eq!(mask, 0);
        }
        s
    }

    /// Number of indices in the universe (not the cardinality of the set).
    pub fn universe_len(&self) -> usize {
        self.nbits
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.nbits
    }

    pub fn contains(&self, i: usize) -> bool {
        assert!(
            i < self.nbits,
            "index {i} outside universe of {}",
            self.nbits
        );
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(
            i < self.nbits,
            "index {i} outside universe of {}",
            self.nbits
        );
        self.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    /// Set difference `self \ other`.
    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    /// Complement within the universe.
    pub fn complement(&self) -> Self {
        let mut s = IndexSet {
            nbits: self.nbits,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.check_same_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &Self) -> bool {
        self.check_same_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Ascending iteration over the member indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nbits).filter(|&i| self.contains(i))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        self.check_same_universe(other);
        IndexSet {
            nbits: self.nbits,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    fn check_same_universe(&self, other: &Self) {
        assert_eq!(
            self.nbits, other.nbits,
            "sets from different universes ({} vs {})",
            self.nbits, other.nbits
        );
    }

    // Clear bits above nbits so Eq/Hash see a canonical form.
    fn trim(&mut self) {
        let spare = self.words.len() * WORD_BITS - self.nbits;
        if spare > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= !0 >> spare;
            }
        }
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Renders a set with the crate's conventions: `∅` for empty, `U` for the
/// whole universe, `{a,b}` otherwise, members in universe order.
pub fn render_set(set: &IndexSet, names: &[String]) -> String {
    debug_assert_eq!(set.universe_len(), names.len());
    if set.is_empty() {
        "∅".to_string()
    } else if set.is_full() {
        "U".to_string()
    } else {
        let members: Vec<&str> = set.iter().map(|i| names[i].as_str()).collect();
        format!("{{{}}}", members.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = IndexSet::from_indices(5, &[0, 2, 4]);
        let b = IndexSet::from_indices(5, &[1, 2]);
        assert_eq!(a.union(&b), IndexSet::from_indices(5, &[0, 1, 2, 4]));
        assert_eq!(a.intersection(&b), IndexSet::from_indices(5, &[2]));
        assert_eq!(a.difference(&b), IndexSet::from_indices(5, &[0, 4]));
        assert_eq!(a.complement(), IndexSet::from_indices(5, &[1, 3]));
        assert_eq!(a.len(), 3);
        assert!(!a.is_subset_of(&b));
        assert!(IndexSet::empty(5).is_subset_of(&b));
        assert!(a.difference(&b).is_disjoint_from(&b));
    }

    #[test]
    fn full_and_complement_beyond_one_word() {
        let n = 130;
        let full = IndexSet::full(n);
        assert_eq!(full.len(), n);
        assert!(full.is_full());
        assert_eq!(full.complement(), IndexSet::empty(n));
        let mut one = IndexSet::empty(n);
        one.insert(128);
        assert!(one.is_subset_of(&full));
        assert_eq!(one.iter().collect::<Vec<_>>(), vec![128]);
    }

    #[test]
    fn mask_roundtrip() {
        let s = IndexSet::from_mask(4, 0b1010);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3]);
    }

    #[test]
    fn rendering() {
        let names: Vec<String> = ["w", "x", "y", "z"].iter().map(|s| s.to_string()).collect();
        assert_eq!(render_set(&IndexSet::empty(4), &names), "∅");
        assert_eq!(render_set(&IndexSet::full(4), &names), "U");
        assert_eq!(
            render_set(&IndexSet::from_indices(4, &[0, 1]), &names),
            "{w,x}"
        );
    }
}
