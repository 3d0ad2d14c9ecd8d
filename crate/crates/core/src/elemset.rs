//! Fixed-width bitsets over the elements of a group of order at most
//! [`MAX_ORDER`].

use std::cmp::Ordering;
use std::fmt;

/// Largest group order representable by an [`ElementSet`].
pub const MAX_ORDER: usize = 512;

const WORDS: usize = MAX_ORDER / 64;

/// A set of element indices, stored as a 512-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet([u64; WORDS]);

impl ElementSet {
    pub const fn empty() -> Self {
        ElementSet([0; WORDS])
    }

    pub fn singleton(x: usize) -> Self {
        let mut s = Self::empty();
        s.insert(x);
        s
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        let mut s = Self::empty();
        for w in 0..WORDS {
            let lo = w * 64;
            if n >= lo + 64 {
                s.0[w] = u64::MAX;
            } else if n > lo {
                s.0[w] = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        let (w, b) = (x / 64, x % 64);
        let fresh = self.0[w] & (1 << b) == 0;
        self.0[w] |= 1 << b;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        self.0[x / 64] &= !(1 << (x % 64));
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.0[x / 64] >> (x % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(&other.0) {
            *a &= b;
        }
        out
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
        out
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
        out
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter {
        Iter {
            words: self.0,
            word: 0,
        }
    }

    /// Lexicographic comparison of the sorted element lists.
    ///
    /// For sets of equal size this is decided by the smallest element of the
    /// symmetric difference: whichever set contains it sorts first.
    pub fn lex_cmp(&self, other: &ElementSet) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            let x = a ^ b;
            if x != 0 {
                let bit = x & x.wrapping_neg();
                return if a & bit != 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSet::empty();
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                let b = w.trailing_zeros() as usize;
                self.words[self.word] &= w - 1;
                return Some(self.word * 64 + b);
            }
            self.word += 1;
        }
        None
    }
}

impl IntoIterator for &ElementSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_len() {
        assert_eq!(ElementSet::full(0).len(), 0);
        assert_eq!(ElementSet::full(64).len(), 64);
        assert_eq!(ElementSet::full(65).len(), 65);
        assert_eq!(ElementSet::full(512).len(), 512);
        assert!(ElementSet::full(3).contains(2));
        assert!(!ElementSet::full(3).contains(3));
    }

    #[test]
    fn lex_order_matches_sorted_lists() {
        let a: ElementSet = [0, 3, 7].into_iter().collect();
        let b: ElementSet = [0, 4, 5].into_iter().collect();
        assert_eq!(a.lex_cmp(&b), Ordering::Less);
        assert_eq!(b.lex_cmp(&a), Ordering::Greater);
        assert_eq!(a.lex_cmp(&a), Ordering::Equal);
    }

    proptest! {
        #[test]
        fn iter_roundtrip(xs in proptest::collection::btree_set(0usize..512, 0..40)) {
            let s: ElementSet = xs.iter().copied().collect();
            let back: Vec<usize> = s.iter().collect();
            prop_assert_eq!(back, xs.iter().copied().collect::<Vec<_>>());
            prop_assert_eq!(s.len(), xs.len());
            prop_assert_eq!(s.first(), xs.iter().next().copied());
        }

        #[test]
        fn lex_cmp_agrees_with_vec_order(
            xs in proptest::collection::btree_set(0usize..200, 5),
            ys in proptest::collection::btree_set(0usize..200, 5),
        ) {
            let a: ElementSet = xs.iter().copied().collect();
            let b: ElementSet = ys.iter().copied().collect();
            let va: Vec<usize> = xs.into_iter().collect();
            let vb: Vec<usize> = ys.into_iter().collect();
            prop_assert_eq!(a.lex_cmp(&b), va.cmp(&vb));
        }
    }
}
