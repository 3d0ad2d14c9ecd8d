//! Table of marks, ghost coordinates, Möbius functions and idempotents of
//! the Burnside ring.

mod idempotent;
mod mobius;

pub use idempotent::{
    fn_idempotent, ghost_solve_rational, gluck_idempotent, marks_of_rational, FNIdempotent,
    RationalIdempotent,
};
pub use mobius::{mobius, mobius_below, PosetKind, MobiusTable};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::group::{double_coset_reps, FiniteGroup};

/// `m[h][k] = |(G/K)^H|` over the canonical class order. Rows are the
/// acting class, columns the transitive set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MarkMatrix {
    pub m: Vec<Vec<i64>>,
}

impl MarkMatrix {
    pub fn size(&self) -> usize {
        self.m.len()
    }

    #[inline]
    pub fn get(&self, h: usize, k: usize) -> i64 {
        self.m[h][k]
    }
}

/// The table of marks of `g`, cached on the group.
pub fn table_of_marks(g: &FiniteGroup) -> &MarkMatrix {
    g.marks.get_or_init(|| {
        let lat = g.lattice();
        let k = lat.class_count();
        let subs = lat.subgroups();
        let mut m = vec![vec![0i64; k]; k];
        for (j, cj) in lat.classes().iter().enumerate() {
            let index = (cj.normalizer.len() / cj.order) as i64;
            for (i, ci) in lat.classes().iter().enumerate().take(j + 1) {
                if !lat.leq(i, j) {
                    continue;
                }
                let over = cj
                    .members
                    .iter()
                    .filter(|&&s| ci.rep.is_subset(&subs[s]))
                    .count() as i64;
                m[i][j] = over * index;
            }
        }
        MarkMatrix { m }
    })
}

/// An element of `B(G)` in the basis of transitive sets `[G/K]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BurnsideElement {
    pub coeffs: Vec<BigInt>,
}

/// Fixed-point counts `|X^H|` over the class order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GhostVector {
    pub values: Vec<BigInt>,
}

impl BurnsideElement {
    pub fn zero(k: usize) -> Self {
        BurnsideElement {
            coeffs: vec![BigInt::zero(); k],
        }
    }

    /// `[G/K]` for the class `k`.
    pub fn transitive(size: usize, k: usize) -> Self {
        let mut b = Self::zero(size);
        b.coeffs[k] = BigInt::one();
        b
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        BurnsideElement {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        BurnsideElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        BurnsideElement {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Product in `B(G)`, expanding `[G/H][G/K]` over `H\G/K`.
    pub fn mul(&self, g: &FiniteGroup, other: &Self) -> Self {
        let lat = g.lattice();
        let k = lat.class_count();
        let mut out = Self::zero(k);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (c, n) in transitive_product(g, i, j) {
                    out.coeffs[c] += &ab * n;
                }
            }
        }
        out
    }
}

impl GhostVector {
    pub fn from_i64(values: &[i64]) -> Self {
        GhostVector {
            values: values.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn pointwise(&self, other: &Self) -> Self {
        GhostVector {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        }
    }
}

/// `[G/H_i]·[G/H_j]` as `(class, multiplicity)` pairs.
pub fn transitive_product(g: &FiniteGroup, i: usize, j: usize) -> Vec<(usize, i64)> {
    let lat = g.lattice();
    let h = lat.class(i).rep;
    let k = lat.class(j).rep;
    let mut counts = vec![0i64; lat.class_count()];
    for x in double_coset_reps(g, &h, &k) {
        let meet = h.intersection(&g.conjugate_set(x, &k));
        counts[lat.class_of(&meet).expect("intersection is a subgroup")] += 1;
    }
    counts
        .into_iter()
        .enumerate()
        .filter(|(_, n)| *n != 0)
        .collect()
}

/// Ghost coordinates of `b`.
pub fn marks_of(g: &FiniteGroup, b: &BurnsideElement) -> GhostVector {
    let m = table_of_marks(g);
    let k = m.size();
    let values = (0..k)
        .map(|h| {
            (h..k)
                .filter(|&j| m.get(h, j) != 0)
                .map(|j| &b.coeffs[j] * m.get(h, j))
                .sum()
        })
        .collect();
    GhostVector { values }
}

/// The integral preimage of `v` under the ghost map, if there is one.
///
/// Back-substitution from the top class down, requiring exact division by
/// the diagonal marks.
pub fn ghost_solve(g: &FiniteGroup, v: &GhostVector) -> Option<BurnsideElement> {
    let m = table_of_marks(g);
    let k = m.size();
    if v.values.len() != k {
        return None;
    }
    let mut c = vec![BigInt::zero(); k];
    for h in (0..k).rev() {
        let mut r = v.values[h].clone();
        for j in h + 1..k {
            let mhj = m.get(h, j);
            if mhj != 0 {
                r -= &c[j] * mhj;
            }
        }
        let (q, rem) = r.div_rem(&BigInt::from(m.get(h, h)));
        if !rem.is_zero() {
            return None;
        }
        c[h] = q;
    }
    Some(BurnsideElement { coeffs: c })
}
