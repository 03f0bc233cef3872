//! Fixed-capacity bit sets indexing elements of a finite ring.

use alloc::vec;
use alloc::vec::Vec;

/// A set of `u32` indices below a fixed capacity, stored as packed 64-bit
/// words. Ordering and equality are by content (capacity first), so bit sets
/// can key ordered maps.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BitSet {
    cap: u32,
    words: Vec<u64>,
}

impl BitSet {
    /// Empty set with room for indices `0..cap`.
    pub fn new(cap: u32) -> Self {
        let nwords = ((cap as usize) + 63) / 64;
        BitSet { cap, words: vec![0; nwords] }
    }

    /// Capacity (one more than the largest storable index).
    pub fn capacity(&self) -> u32 {
        self.cap
    }

    /// Inserts `i`; returns `true` if it was not already present.
    pub fn insert(&mut self, i: u32) -> bool {
        debug_assert!(i < self.cap);
        let w = (i / 64) as usize;
        let b = 1u64 << (i % 64);
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        fresh
    }

    /// Removes `i`; returns `true` if it was present.
    pub fn remove(&mut self, i: u32) -> bool {
        debug_assert!(i < self.cap);
        let w = (i / 64) as usize;
        let b = 1u64 << (i % 64);
        let had = self.words[w] & b != 0;
        self.words[w] &= !b;
        had
    }

    /// Membership test.
    pub fn contains(&self, i: u32) -> bool {
        debug_assert!(i < self.cap);
        self.words[(i / 64) as usize] & (1u64 << (i % 64)) != 0
    }

    /// Number of elements.
    pub fn count(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// True if no element is set.
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// In-place union.
    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.cap, other.cap);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    /// In-place intersection.
    pub fn intersect_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.cap, other.cap);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }

    /// True if every element of `self` lies in `other`.
    pub fn is_subset(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.cap, other.cap);
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    /// Ascending iterator over the stored indices.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let base = (wi as u32) * 64;
            BitIter { word: w, base }
        })
    }
}

struct BitIter {
    word: u64,
    base: u32,
}

impl Iterator for BitIter {
    type Item = u32;
    fn next(&mut self) -> Option<u32> {
        if self.word == 0 {
            return None;
        }
        let tz = self.word.trailing_zeros();
        self.word &= self.word - 1;
        Some(self.base + tz)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn insert_contains_iter() {
        let mut s = BitSet::new(130);
        assert!(s.is_empty());
        assert!(s.insert(0));
        assert!(s.insert(63));
        assert!(s.insert(64));
        assert!(s.insert(129));
        assert!(!s.insert(64));
        assert_eq!(s.count(), 4);
        assert!(s.contains(0) && s.contains(63) && s.contains(64) && s.contains(129));
        assert!(!s.contains(1) && !s.contains(128));
        let got: Vec<u32> = s.iter().collect();
        assert_eq!(got, vec![0, 63, 64, 129]);
        assert!(s.remove(63));
        assert!(!s.remove(63));
        assert_eq!(s.count(), 3);
    }

    #[test]
    fn subset_union_intersect() {
        let mut a = BitSet::new(100);
        let mut b = BitSet::new(100);
        for i in [3u32, 40, 77] {
            a.insert(i);
        }
        for i in [3u32, 40, 77, 99] {
            b.insert(i);
        }
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        let mut u = a.clone();
        u.union_with(&b);
        assert_eq!(u, b);
        let mut x = b.clone();
        x.intersect_with(&a);
        assert_eq!(x, a);
    }
}
