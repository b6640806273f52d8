//! Membership bitsets over the element indices of a fixed parent group.

use std::cmp::Ordering;
use std::fmt;

const WORD_BITS: usize = 64;

/// A subset of `0..parent_order`, stored as a little-endian bitset.
///
/// Element `i` is bit `i`, so the "numeric value" of a set is the integer
/// `sum(2^i for i in set)`. Sets are totally ordered by `(size, numeric value)`,
/// which is the sort key used for every list of subgroups in this crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubgroupSet {
    words: Vec<u64>,
    parent_order: usize,
}

impl SubgroupSet {
    pub fn empty(parent_order: usize) -> Self {
        SubgroupSet {
            words: vec![0; parent_order.div_ceil(WORD_BITS)],
            parent_order,
        }
    }

    pub fn full(parent_order: usize) -> Self {
        let mut s = Self::empty(parent_order);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(parent_order: usize, it: I) -> Self {
        let mut s = Self::empty(parent_order);
        for i in it {
            s.insert(i);
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.parent_order % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.parent_order && self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    /// Inserts `i`, returning true if it was not already present.
    ///
    /// Panics if `i` is outside the parent group.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(
            i < self.parent_order,
            "element {i} outside parent of order {}",
            self.parent_order
        );
        let w = &mut self.words[i / WORD_BITS];
        let bit = 1u64 << (i % WORD_BITS);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < self.parent_order {
            self.words[i / WORD_BITS] &= !(1u64 << (i % WORD_BITS));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.parent_order
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Lowest element index, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn is_subset(&self, other: &SubgroupSet) -> bool {
        debug_assert_eq!(self.parent_order, other.parent_order);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &SubgroupSet) -> SubgroupSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn union(&self, other: &SubgroupSet) -> SubgroupSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersect_with(&mut self, other: &SubgroupSet) {
        debug_assert_eq!(self.parent_order, other.parent_order);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &SubgroupSet) {
        debug_assert_eq!(self.parent_order, other.parent_order);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &SubgroupSet) {
        debug_assert_eq!(self.parent_order, other.parent_order);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    /// `|self ∪ other|` without allocating.
    pub fn union_len(&self, other: &SubgroupSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    /// Raw words, least significant first.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    fn cmp_value(&self, other: &SubgroupSet) -> Ordering {
        let n = self.words.len().max(other.words.len());
        for i in (0..n).rev() {
            let a = self.words.get(i).copied().unwrap_or(0);
            let b = other.words.get(i).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl Ord for SubgroupSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.cmp_value(other))
            .then_with(|| self.parent_order.cmp(&other.parent_order))
    }
}

impl PartialOrd for SubgroupSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubgroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let tz = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * WORD_BITS + tz);
            }
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
    }
}

impl<'a> IntoIterator for &'a SubgroupSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_empty() {
        let f = SubgroupSet::full(70);
        assert_eq!(f.len(), 70);
        assert!(f.is_full());
        assert!(!f.contains(70));
        let e = SubgroupSet::empty(70);
        assert!(e.is_empty());
        assert!(e.is_subset(&f));
        assert_eq!(SubgroupSet::full(0).len(), 0);
    }

    #[test]
    fn order_is_size_then_value() {
        let a = SubgroupSet::from_indices(8, [0, 5]);
        let b = SubgroupSet::from_indices(8, [0, 1, 2]);
        let c = SubgroupSet::from_indices(8, [0, 6]);
        assert!(a < b);
        assert!(a < c);
        let hi = SubgroupSet::from_indices(130, [129]);
        let lo = SubgroupSet::from_indices(130, [64]);
        assert!(lo < hi);
    }

    proptest! {
        #[test]
        fn set_algebra_matches_btreeset(
            xs in proptest::collection::btree_set(0usize..150, 0..60),
            ys in proptest::collection::btree_set(0usize..150, 0..60),
        ) {
            let a = SubgroupSet::from_indices(150, xs.iter().copied());
            let b = SubgroupSet::from_indices(150, ys.iter().copied());
            let inter: Vec<usize> = xs.intersection(&ys).copied().collect();
            let uni: Vec<usize> = xs.union(&ys).copied().collect();
            prop_assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), inter);
            prop_assert_eq!(a.union(&b).iter().collect::<Vec<_>>(), uni.clone());
            prop_assert_eq!(a.union_len(&b), uni.len());
            prop_assert_eq!(a.is_subset(&b), xs.is_subset(&ys));
            prop_assert_eq!(a.len(), xs.len());
        }
    }
}
