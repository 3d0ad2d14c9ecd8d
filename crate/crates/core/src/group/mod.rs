//! Small finite groups given by explicit Cayley tables, their subgroup
//! lattices, quotients, sections, double cosets and isomorphism testing.

mod construct;
mod iso;
mod lattice;
mod pseudodihedral;
mod quotient;

pub use construct::{construct_group, GroupSpec};
pub use iso::{abelian_invariants, automorphisms, is_isomorphic};
pub use lattice::{SubgroupClass, SubgroupLattice};
pub use pseudodihedral::{
    c_prime_core, has_abelian_subgroup_of_index_at_most_two, recognize_pseudodihedral,
    PseudodihedralWitness,
};
pub use quotient::{
    double_coset_reps, quotient_group, section_classes, sections, subgroup_group, Section,
    SectionGroups,
};

use std::fmt;
use std::sync::OnceLock;

use crate::burnside::MarkMatrix;
use crate::elemset::{ElementSet, MAX_ORDER};
use crate::error::{Error, Result};
use crate::units::UnitSubspace;

/// A finite group on the element indices `0..order`, with identity `0`.
///
/// Derived tables (subgroup lattice, table of marks, unit group) are computed
/// on first use and cached; the cache is safe for concurrent readers.
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    elem_orders: Vec<u32>,
    label: String,
    generators: OnceLock<Vec<usize>>,
    lattice: OnceLock<SubgroupLattice>,
    pub(crate) marks: OnceLock<MarkMatrix>,
    pub(crate) units: OnceLock<UnitSubspace>,
}

impl FiniteGroup {
    /// Builds a group from a row-major multiplication table.
    ///
    /// The table must have identity `0`; every row must be a permutation.
    /// Associativity is not checked here, see [`FiniteGroup::check_axioms`].
    pub fn from_table(label: impl Into<String>, order: usize, mul: Vec<u16>) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::OrderCap {
                order,
                cap: MAX_ORDER,
            });
        }
        if mul.len() != order * order {
            return Err(Error::InvalidArgument(format!(
                "table has {} entries, expected {}",
                mul.len(),
                order * order
            )));
        }
        for x in 0..order {
            if mul[x] as usize != x || mul[x * order] as usize != x {
                return Err(Error::InvalidArgument("0 is not the identity".into()));
            }
        }
        let mut inv = vec![u16::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if mul[a * order + b] == 0 {
                    inv[a] = b as u16;
                    break;
                }
            }
            if inv[a] == u16::MAX {
                return Err(Error::InvalidArgument(format!("element {a} has no inverse")));
            }
        }
        let mut elem_orders = vec![0u32; order];
        for (a, slot) in elem_orders.iter_mut().enumerate() {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = mul[x * order + a] as usize;
                k += 1;
                if k > order as u32 + 1 {
                    return Err(Error::InvalidArgument("table is not a group".into()));
                }
            }
            *slot = k;
        }
        Ok(FiniteGroup {
            order,
            mul,
            inv,
            elem_orders,
            label: label.into(),
            generators: OnceLock::new(),
            lattice: OnceLock::new(),
            marks: OnceLock::new(),
            units: OnceLock::new(),
        })
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        Self::from_table("cyclic:1", 1, vec![0]).expect("trivial table")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    #[inline]
    pub fn elem_order(&self, a: usize) -> usize {
        self.elem_orders[a] as usize
    }

    /// `g x g^-1`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> ElementSet {
        let gens = self.generators();
        (0..self.order)
            .filter(|&z| gens.iter().all(|&g| self.mul(g, z) == self.mul(z, g)))
            .collect()
    }

    /// Sorted multiset of element orders.
    pub fn order_statistics(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order).map(|a| self.elem_order(a)).collect();
        v.sort_unstable();
        v
    }

    /// Exhaustive check of associativity, identity and inverses.
    pub fn check_axioms(&self) -> bool {
        let n = self.order;
        for a in 0..n {
            if self.mul(a, 0) != a || self.mul(0, a) != a {
                return false;
            }
            if self.mul(a, self.inv(a)) != 0 || self.mul(self.inv(a), a) != 0 {
                return false;
            }
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> ElementSet {
        self.closure_from(&ElementSet::singleton(0), gens)
    }

    /// Subgroup generated by a subgroup `base` together with `extra`.
    pub fn extend(&self, base: &ElementSet, extra: &[usize]) -> ElementSet {
        let mut gens = self.subgroup_generators(base);
        gens.extend_from_slice(extra);
        self.closure_from(base, &gens)
    }

    /// Closure of `start` under right multiplication by `gens`; equals
    /// `<gens>` whenever `start` is contained in it.
    pub(crate) fn closure_from(&self, start: &ElementSet, gens: &[usize]) -> ElementSet {
        let mut set = *start;
        let mut elems: Vec<usize> = start.iter().collect();
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    elems.push(y);
                }
            }
            i += 1;
        }
        set
    }

    pub fn is_subgroup(&self, set: &ElementSet) -> bool {
        if !set.contains(0) {
            return false;
        }
        set.iter()
            .all(|a| set.iter().all(|b| set.contains(self.mul(a, self.inv(b)))))
    }

    pub fn conjugate_set(&self, g: usize, set: &ElementSet) -> ElementSet {
        set.iter().map(|x| self.conj(g, x)).collect()
    }

    /// `{ab : a in A, b in B}`.
    pub fn set_product(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty();
        for x in a {
            for y in b {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    /// Greedy small generating set: repeatedly adjoin the element that
    /// enlarges the generated subgroup the most.
    pub fn generators(&self) -> &[usize] {
        self.generators.get_or_init(|| {
            let mut gens = Vec::new();
            let mut cur = ElementSet::singleton(0);
            while cur.len() < self.order {
                let mut best = (0, 0, ElementSet::empty());
                for g in 0..self.order {
                    if cur.contains(g) {
                        continue;
                    }
                    let mut trial = gens.clone();
                    trial.push(g);
                    let ext = self.closure_from(&cur, &trial);
                    if ext.len() > best.0 {
                        best = (ext.len(), g, ext);
                    }
                }
                gens.push(best.1);
                cur = best.2;
            }
            gens
        })
    }

    /// Generators of a subgroup, chosen greedily in element order.
    pub fn subgroup_generators(&self, set: &ElementSet) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut cur = ElementSet::singleton(0);
        for x in set {
            if !cur.contains(x) {
                gens.push(x);
                cur = self.closure_from(&cur, &gens);
                if cur.len() == set.len() {
                    break;
                }
            }
        }
        gens
    }

    /// Whether `g` normalizes the subgroup with the given generators.
    pub fn normalizes(&self, g: usize, set: &ElementSet, gens: &[usize]) -> bool {
        gens.iter().all(|&h| set.contains(self.conj(g, h)))
    }

    pub fn is_normal(&self, set: &ElementSet) -> bool {
        let gens = self.subgroup_generators(set);
        self.generators()
            .iter()
            .all(|&g| self.normalizes(g, set, &gens))
    }

    /// The subgroup lattice, computed on first use.
    pub fn lattice(&self) -> &SubgroupLattice {
        self.lattice.get_or_init(|| SubgroupLattice::build(self))
    }
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        FiniteGroup {
            order: self.order,
            mul: self.mul.clone(),
            inv: self.inv.clone(),
            elem_orders: self.elem_orders.clone(),
            label: self.label.clone(),
            generators: self.generators.clone(),
            lattice: self.lattice.clone(),
            marks: self.marks.clone(),
            units: self.units.clone(),
        }
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish()
    }
}

/// A map between the element sets of two groups, given as an image table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMap {
    pub image: Vec<usize>,
}

impl GroupMap {
    pub fn identity(n: usize) -> Self {
        GroupMap {
            image: (0..n).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn apply_set(&self, set: &ElementSet) -> ElementSet {
        set.iter().map(|x| self.image[x]).collect()
    }

    pub fn preimage_set(&self, set: &ElementSet) -> ElementSet {
        (0..self.image.len())
            .filter(|&x| set.contains(self.image[x]))
            .collect()
    }

    pub fn kernel(&self) -> ElementSet {
        self.preimage_set(&ElementSet::singleton(0))
    }

    pub fn is_homomorphism(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        if self.image.len() != source.order() || self.image.iter().any(|&y| y >= target.order()) {
            return false;
        }
        let n = source.order();
        (0..n).all(|a| {
            (0..n).all(|b| self.image[source.mul(a, b)] == target.mul(self.image[a], self.image[b]))
        })
    }

    pub fn is_isomorphism(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        source.order() == target.order()
            && self.image.iter().copied().collect::<ElementSet>().len() == target.order()
            && self.is_homomorphism(source, target)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupMap) -> GroupMap {
        GroupMap {
            image: self.image.iter().map(|&y| other.image[y]).collect(),
        }
    }

    /// Inverse on the image of an injective map into a group of order
    /// `target_order`; points outside the image map to `usize::MAX`.
    pub fn inverse_partial(&self, target_order: usize) -> Vec<usize> {
        let mut back = vec![usize::MAX; target_order];
        for (x, &y) in self.image.iter().enumerate() {
            back[y] = x;
        }
        back
    }

    pub fn inverse(&self) -> GroupMap {
        let mut image = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            image[y] = x;
        }
        GroupMap { image }
    }
}
