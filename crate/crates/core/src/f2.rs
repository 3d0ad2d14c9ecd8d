//! Bit vectors over F2 and subspaces kept in reduced row-echelon form.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct F2Vec {
    words: Vec<u64>,
    len: usize,
}

impl F2Vec {
    pub fn zeros(len: usize) -> Self {
        F2Vec {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            v.set(i, true);
        }
        v
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = Self::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    /// Parses a string of `0` and `1` characters.
    pub fn parse(s: &str) -> Option<Self> {
        let bits: Option<Vec<bool>> = s
            .chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect();
        Some(Self::from_bools(bits?))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, b: bool) {
        if b {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &F2Vec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &F2Vec) -> F2Vec {
        let mut v = self.clone();
        v.xor_assign(other);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones_iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    pub fn to_bit_string(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for F2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vec({})", self.to_bit_string())
    }
}

impl fmt::Display for F2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

/// A subspace of `F2^len` stored as a fully reduced echelon basis, rows
/// sorted by pivot (the lowest set bit).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Span {
    len: usize,
    rows: Vec<F2Vec>,
    pivots: Vec<usize>,
}

impl F2Span {
    pub fn new(len: usize) -> Self {
        F2Span {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a F2Vec>>(len: usize, vs: I) -> Self {
        let mut s = Self::new(len);
        for v in vs {
            s.insert(v.clone());
        }
        s
    }

    pub fn ambient_len(&self) -> usize {
        self.len
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[F2Vec] {
        &self.rows
    }

    pub fn reduce(&self, mut v: F2Vec) -> F2Vec {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &F2Vec) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: F2Vec) -> bool {
        let v = self.reduce(v);
        let Some(p) = v.first_one() else {
            return false;
        };
        for row in self.rows.iter_mut() {
            if row.get(p) {
                row.xor_assign(&v);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn is_subspace_of(&self, other: &F2Span) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &F2Span) -> F2Span {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        s
    }
}

/// Coefficient vectors `c` with `Σ c_i images[i] = 0`, as a basis.
pub fn kernel_combinations(images: &[F2Vec]) -> Vec<F2Vec> {
    let d = images.len();
    let mut pivots: Vec<(usize, F2Vec, F2Vec)> = Vec::new();
    let mut out = Vec::new();
    for (i, img) in images.iter().enumerate() {
        let mut v = img.clone();
        let mut c = F2Vec::zeros(d);
        c.set(i, true);
        for (p, pv, pc) in &pivots {
            if v.get(*p) {
                v.xor_assign(pv);
                c.xor_assign(pc);
            }
        }
        match v.first_one() {
            None => out.push(c),
            Some(p) => {
                for (_, qv, qc) in pivots.iter_mut() {
                    if qv.get(p) {
                        qv.xor_assign(&v);
                        qc.xor_assign(&c);
                    }
                }
                pivots.push((p, v, c));
            }
        }
    }
    out
}

/// Rank of a list of rows.
pub fn rank(rows: &[F2Vec]) -> usize {
    match rows.first() {
        None => 0,
        Some(r) => F2Span::from_vectors(r.len(), rows).rank(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(s: &str) -> F2Vec {
        F2Vec::parse(s).unwrap()
    }

    #[test]
    fn rref_basics() {
        let mut s = F2Span::new(4);
        assert!(s.insert(v("1100")));
        assert!(s.insert(v("0110")));
        assert!(!s.insert(v("1010")));
        assert!(s.insert(v("0001")));
        assert_eq!(s.rank(), 3);
        assert_eq!(s.rows(), &[v("1010"), v("0110"), v("0001")]);
        assert!(s.contains(&v("1011")));
        assert!(!s.contains(&v("1000")));
    }

    #[test]
    fn kernel_small() {
        let k = kernel_combinations(&[v("110"), v("011"), v("101")]);
        assert_eq!(k, vec![v("111")]);
        assert!(kernel_combinations(&[v("10"), v("01")]).is_empty());
    }

    #[test]
    fn rank_wide() {
        let rows: Vec<F2Vec> = (0..70)
            .map(|i| {
                let mut r = F2Vec::zeros(130);
                r.set(i, true);
                r.set(i + 60, true);
                r
            })
            .collect();
        assert_eq!(rank(&rows), 70);
    }

    proptest! {
        #[test]
        fn rank_plus_kernel(rows in proptest::collection::vec(proptest::collection::vec(any::<bool>(), 9), 1..12)) {
            let vs: Vec<F2Vec> = rows.into_iter().map(F2Vec::from_bools).collect();
            let r = rank(&vs);
            let k = kernel_combinations(&vs);
            prop_assert_eq!(r + k.len(), vs.len());
            for c in &k {
                let mut acc = F2Vec::zeros(9);
                for i in c.ones_iter() {
                    acc.xor_assign(&vs[i]);
                }
                prop_assert!(acc.is_zero());
            }
            let span = F2Span::from_vectors(9, &vs);
            for v in &vs {
                prop_assert!(span.contains(v));
            }
        }
    }
}
