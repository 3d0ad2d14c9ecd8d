//! The unit group `B^×(G)` as an F2 space over subgroup classes, with the
//! elementary biset operations acting on it.

mod ops;
mod phi;

pub use ops::{deflate, inflate, iso_transport, restrict, tensor_induce, ten_minus_one};
pub use phi::{
    exponential, exponential_image, faithful_part, fn_project, phi, standard_basis, standard_basis_elements, PhiElement,
    PhiKind,
};
pub(crate) use phi::{inflated_phi_family, orbit_sums_induced};

use crate::burnside::{ghost_solve, table_of_marks, GhostVector};
use crate::error::{Error, Result};
use crate::f2::{F2Span, F2Vec};
use crate::group::FiniteGroup;

/// Default bound on the number of subgroup classes for brute-force unit
/// enumeration.
pub const DEFAULT_CLASS_CAP: usize = 24;

/// A unit of `B(G)`: bit `i` is set when the mark at class `i` is `-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Unit {
    pub bits: F2Vec,
}

impl Unit {
    pub fn identity(classes: usize) -> Self {
        Unit {
            bits: F2Vec::zeros(classes),
        }
    }

    pub fn minus_one(classes: usize) -> Self {
        Unit {
            bits: F2Vec::ones(classes),
        }
    }

    pub fn from_bits(bits: F2Vec) -> Self {
        Unit { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.bits.is_zero()
    }

    /// Product of units.
    pub fn mul(&self, other: &Unit) -> Unit {
        Unit {
            bits: self.bits.xor(&other.bits),
        }
    }

    pub fn sign(&self, i: usize) -> i64 {
        if self.bits.get(i) {
            -1
        } else {
            1
        }
    }

    pub fn ghost(&self) -> GhostVector {
        let signs: Vec<i64> = (0..self.len()).map(|i| self.sign(i)).collect();
        GhostVector::from_i64(&signs)
    }

    /// Whether the sign vector lies in the image of the ghost map.
    pub fn is_valid(&self, g: &FiniteGroup) -> bool {
        self.len() == g.lattice().class_count() && ghost_solve(g, &self.ghost()).is_some()
    }
}

/// A subgroup of `B^×(G)`, kept as a reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitSubspace {
    span: F2Span,
}

impl UnitSubspace {
    pub fn zero(classes: usize) -> Self {
        UnitSubspace {
            span: F2Span::new(classes),
        }
    }

    pub fn spanned_by<'a, I: IntoIterator<Item = &'a Unit>>(classes: usize, units: I) -> Self {
        UnitSubspace {
            span: F2Span::from_vectors(classes, units.into_iter().map(|u| &u.bits)),
        }
    }

    pub fn dim(&self) -> usize {
        self.span.rank()
    }

    pub fn classes(&self) -> usize {
        self.span.ambient_len()
    }

    pub fn basis(&self) -> Vec<Unit> {
        self.span.rows().iter().cloned().map(Unit::from_bits).collect()
    }

    pub fn contains(&self, u: &Unit) -> bool {
        self.span.contains(&u.bits)
    }

    pub fn insert(&mut self, u: &Unit) -> bool {
        self.span.insert(u.bits.clone())
    }

    pub fn is_subspace_of(&self, other: &UnitSubspace) -> bool {
        self.span.is_subspace_of(&other.span)
    }

    pub fn sum(&self, other: &UnitSubspace) -> UnitSubspace {
        UnitSubspace {
            span: self.span.sum(&other.span),
        }
    }

    pub fn span(&self) -> &F2Span {
        &self.span
    }
}

/// `B^×(G)` by exhaustive search with the default class cap.
pub fn unit_group(g: &FiniteGroup) -> Result<UnitSubspace> {
    unit_group_with_cap(g, DEFAULT_CLASS_CAP)
}

/// `B^×(G)` by exhaustive search over sign vectors.
///
/// Signs are chosen from the top class down; each choice fixes one
/// coefficient of the preimage, which must be an integer, so invalid
/// prefixes are cut immediately.
pub fn unit_group_with_cap(g: &FiniteGroup, cap: usize) -> Result<UnitSubspace> {
    let k = g.lattice().class_count();
    if let Some(u) = g.units.get() {
        return Ok(u.clone());
    }
    if k > cap {
        return Err(Error::EnumerationCap { classes: k, cap });
    }
    let m = table_of_marks(g);
    let mut coeffs = vec![0i128; k];
    let mut bits = F2Vec::zeros(k);
    let mut span = F2Span::new(k);
    search(m, k, &mut coeffs, &mut bits, &mut span)?;
    let out = UnitSubspace { span };
    let _ = g.units.set(out.clone());
    Ok(out)
}

fn search(
    m: &crate::burnside::MarkMatrix,
    h: usize,
    coeffs: &mut [i128],
    bits: &mut F2Vec,
    span: &mut F2Span,
) -> Result<()> {
    if h == 0 {
        span.insert(bits.clone());
        return Ok(());
    }
    let h = h - 1;
    let k = coeffs.len();
    let mut rest: i128 = 0;
    for (j, c) in coeffs.iter().enumerate().take(k).skip(h + 1) {
        let mhj = m.get(h, j) as i128;
        if mhj != 0 {
            rest = mhj
                .checked_mul(*c)
                .and_then(|t| rest.checked_add(t))
                .ok_or(Error::Overflow)?;
        }
    }
    let d = m.get(h, h) as i128;
    for (bit, v) in [(false, 1i128), (true, -1i128)] {
        let r = v.checked_sub(rest).ok_or(Error::Overflow)?;
        if r % d == 0 {
            coeffs[h] = r / d;
            bits.set(h, bit);
            search(m, h, coeffs, bits, span)?;
        }
    }
    bits.set(h, false);
    coeffs[h] = 0;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::construct_group;

    fn dim(spec: &str) -> usize {
        unit_group(&construct_group(spec).unwrap()).unwrap().dim()
    }

    #[test]
    fn small_dims() {
        assert_eq!(dim("cyclic:1"), 1);
        assert_eq!(dim("cyclic:2"), 2);
        assert_eq!(dim("cyclic:3"), 1);
        assert_eq!(dim("dihedral:5"), 3);
        assert_eq!(dim("dihedral:4"), 5);
        // subgroups of index at most 2
        assert_eq!(dim("abelian:2,2"), 4);
    }

    #[test]
    fn units_pass_ghost_membership() {
        let g = construct_group("dihedral:6").unwrap();
        for u in unit_group(&g).unwrap().basis() {
            assert!(u.is_valid(&g));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = construct_group("dihedral:4").unwrap();
        assert_eq!(
            unit_group_with_cap(&g, 3).unwrap_err(),
            Error::EnumerationCap { classes: 8, cap: 3 }
        );
    }
}
