use std::collections::HashSet;

use super::ops::{deflate, inflate, ten_minus_one, tensor_induce};
use super::{unit_group_with_cap, Unit, UnitSubspace};
use crate::burnside::{BurnsideElement, FNIdempotent};
use crate::elemset::ElementSet;
use crate::error::{Error, Result};
use crate::f2::{kernel_combinations, F2Vec};
use crate::group::{
    c_prime_core, quotient_group, recognize_pseudodihedral, subgroup_group, FiniteGroup,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PhiKind {
    Trivial,
    C2,
    Pseudodihedral,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiElement {
    pub unit: Unit,
    pub kind: PhiKind,
}

/// The faithful unit `Φ_G` of a trivial, cyclic of order 2 or
/// pseudodihedral group: `-1` exactly at the noncentral subgroups of order 2
/// (all of `{1}` for the trivial group, the whole group for `C2`).
pub fn phi(g: &FiniteGroup) -> Result<PhiElement> {
    let lat = g.lattice();
    let k = lat.class_count();
    let (unit, kind) = match g.order() {
        1 => (Unit::minus_one(1), PhiKind::Trivial),
        2 => {
            let mut b = F2Vec::zeros(2);
            b.set(1, true);
            (Unit::from_bits(b), PhiKind::C2)
        }
        _ => {
            if recognize_pseudodihedral(g).is_none() {
                return Err(Error::NoPhi(g.label().to_string()));
            }
            let z = g.center();
            let bits = F2Vec::from_bools(
                lat.classes()
                    .iter()
                    .map(|c| c.order == 2 && !c.rep.is_subset(&z)),
            );
            (Unit::from_bits(bits), PhiKind::Pseudodihedral)
        }
    };
    debug_assert_eq!(unit.len(), k);
    if !unit.is_valid(g) {
        return Err(Error::NoPhi(g.label().to_string()));
    }
    Ok(PhiElement { unit, kind })
}

/// `Inf^N_{N/K} Φ_{N/K}` for every normal `K` of `n` whose quotient has a
/// `Φ` element and passes `admit`.
pub(crate) fn inflated_phi_family(
    n: &FiniteGroup,
    mut admit: impl FnMut(&FiniteGroup) -> Result<bool>,
) -> Result<Vec<(ElementSet, Unit)>> {
    let mut out = Vec::new();
    for k in n.lattice().normal_subgroups() {
        let (q, proj) = quotient_group(n, &k)?;
        let Ok(p) = phi(&q) else {
            continue;
        };
        if admit(&q)? {
            out.push((k, inflate(&q, &p.unit, n, &proj)));
        }
    }
    Ok(out)
}

/// Sums a family indexed by normal subgroups of `N ⊴ G` over `G`-orbits
/// and induces each sum to `G`.
pub(crate) fn orbit_sums_induced(
    g: &FiniteGroup,
    core: &ElementSet,
    n: &FiniteGroup,
    emb: &crate::group::GroupMap,
    family: &[(ElementSet, Unit)],
) -> Vec<Unit> {
    let back = emb.inverse_partial(g.order());
    let by_set: std::collections::HashMap<ElementSet, &Unit> =
        family.iter().map(|(k, u)| (*k, u)).collect();
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut out = Vec::new();
    for (k, _) in family {
        if seen.contains(k) {
            continue;
        }
        let mut orbit = vec![*k];
        seen.insert(*k);
        let mut i = 0;
        while i < orbit.len() {
            let parent = emb.apply_set(&orbit[i]);
            for &x in g.generators() {
                let c: ElementSet = g
                    .conjugate_set(x, &parent)
                    .iter()
                    .map(|y| back[y])
                    .collect();
                if seen.insert(c) {
                    orbit.push(c);
                }
            }
            i += 1;
        }
        let mut sum = Unit::identity(n.lattice().class_count());
        for m in &orbit {
            sum = sum.mul(by_set[m]);
        }
        out.push(if core.len() == g.order() {
            sum
        } else {
            tensor_induce(n, &sum, g, emb)
        });
    }
    out
}

/// Inflated `Φ` elements over the least odd-index normal subgroup `N`
/// admitting an abelian subgroup of index at most 2, summed over
/// `G`-orbits and tensor induced to `G`.
pub fn standard_basis(g: &FiniteGroup) -> Result<UnitSubspace> {
    let units = standard_basis_elements(g)?;
    Ok(UnitSubspace::spanned_by(g.lattice().class_count(), &units))
}

/// The standard basis elements themselves, before echelon reduction.
pub fn standard_basis_elements(g: &FiniteGroup) -> Result<Vec<Unit>> {
    let core = c_prime_core(g).ok_or_else(|| Error::NotInCPrime(g.label().to_string()))?;
    let (n, emb) = subgroup_group(g, &core);
    let family = inflated_phi_family(&n, |_| Ok(true))?;
    Ok(orbit_sums_induced(g, &core, &n, &emb, &family))
}

/// Units with sign `+1` at every subgroup containing a nontrivial normal
/// subgroup.
pub fn faithful_part(g: &FiniteGroup, cap: usize) -> Result<UnitSubspace> {
    let all = unit_group_with_cap(g, cap)?;
    let lat = g.lattice();
    let normals: Vec<ElementSet> = lat
        .normal_subgroups()
        .into_iter()
        .filter(|n| n.len() > 1)
        .collect();
    let mask: Vec<usize> = lat
        .classes()
        .iter()
        .enumerate()
        .filter(|(_, c)| normals.iter().any(|n| n.is_subset(&c.rep)))
        .map(|(i, _)| i)
        .collect();
    let basis = all.basis();
    let images: Vec<F2Vec> = basis
        .iter()
        .map(|u| F2Vec::from_bools(mask.iter().map(|&i| u.bits.get(i))))
        .collect();
    let k = lat.class_count();
    let units: Vec<Unit> = kernel_combinations(&images)
        .into_iter()
        .map(|c| {
            let mut u = Unit::identity(k);
            for i in c.ones_iter() {
                u = u.mul(&basis[i]);
            }
            u
        })
        .collect();
    Ok(UnitSubspace::spanned_by(k, &units))
}

/// Action of `f_N` on a unit; only the parity of each coefficient matters.
pub fn fn_project(g: &FiniteGroup, u: &Unit, f: &FNIdempotent) -> Result<Unit> {
    let mut out = Unit::identity(u.len());
    for (m, c) in &f.terms {
        if c % 2 == 0 {
            continue;
        }
        let (q, proj) = quotient_group(g, m)?;
        let d = deflate(g, u, &q, &proj);
        out = out.mul(&inflate(&q, &d, g, &proj));
    }
    Ok(out)
}

/// `ε_G(b)`, extending `[G/H] -> Ten^G_H(-1)` over F2.
pub fn exponential(g: &FiniteGroup, b: &BurnsideElement) -> Unit {
    let k = g.lattice().class_count();
    let mut out = Unit::identity(k);
    for (h, c) in b.coeffs.iter().enumerate() {
        if c.bit(0) {
            out = out.mul(&ten_minus_one(g, h));
        }
    }
    out
}

pub fn exponential_image(g: &FiniteGroup) -> UnitSubspace {
    let k = g.lattice().class_count();
    let gens: Vec<Unit> = (0..k).map(|h| ten_minus_one(g, h)).collect();
    UnitSubspace::spanned_by(k, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burnside::{fn_idempotent, ghost_solve};
    use crate::group::construct_group;
    use crate::units::{unit_group, DEFAULT_CLASS_CAP};

    fn g(s: &str) -> FiniteGroup {
        construct_group(s).unwrap()
    }

    #[test]
    fn phi_shapes() {
        assert_eq!(phi(&g("cyclic:1")).unwrap().unit.bits.to_bit_string(), "1");
        assert_eq!(phi(&g("cyclic:2")).unwrap().unit.bits.to_bit_string(), "01");
        assert_eq!(phi(&g("dihedral:5")).unwrap().unit.bits.to_bit_string(), "0100");
        let d12 = g("pd:2,3");
        let p = phi(&d12).unwrap();
        assert_eq!(p.kind, PhiKind::Pseudodihedral);
        assert_eq!(p.unit.bits.count_ones(), 2);
        assert!(matches!(phi(&g("cyclic:3")), Err(Error::NoPhi(_))));
    }

    #[test]
    fn phi_d10_coefficients() {
        let d = g("dihedral:5");
        let b = ghost_solve(&d, &phi(&d).unwrap().unit.ghost()).unwrap();
        assert_eq!(b, BurnsideElement::from_i64(&[1, -2, 0, 1]));
    }

    #[test]
    fn standard_basis_dims() {
        assert_eq!(standard_basis(&g("dihedral:6")).unwrap().dim(), 6);
        assert_eq!(standard_basis(&g("cyclic:2")).unwrap().dim(), 2);
        let x = g("dihedral:5 x cyclic:3");
        let s = standard_basis(&x).unwrap();
        assert_eq!(s.dim(), 3);
        assert_eq!(s, unit_group(&x).unwrap());
    }

    #[test]
    fn faithful_parts() {
        assert_eq!(faithful_part(&g("cyclic:4"), DEFAULT_CLASS_CAP).unwrap().dim(), 0);
        assert_eq!(faithful_part(&g("abelian:2,2"), DEFAULT_CLASS_CAP).unwrap().dim(), 0);
        let d = g("dihedral:5");
        let f = faithful_part(&d, DEFAULT_CLASS_CAP).unwrap();
        assert_eq!(f.dim(), 1);
        assert!(f.contains(&phi(&d).unwrap().unit));
        assert_eq!(faithful_part(&g("pd:4,3"), DEFAULT_CLASS_CAP).unwrap().dim(), 1);
    }

    #[test]
    fn f1_projection_d10() {
        let d = g("dihedral:5");
        let f1 = fn_idempotent(&d, &ElementSet::singleton(0)).unwrap();
        let p = phi(&d).unwrap().unit;
        assert_eq!(fn_project(&d, &p, &f1).unwrap(), p);
        let (q, proj) = quotient_group(&d, &d.generate(&[1])).unwrap();
        let inf = inflate(&q, &phi(&q).unwrap().unit, &d, &proj);
        assert!(fn_project(&d, &inf, &f1).unwrap().is_identity());
    }

    #[test]
    fn exponential_examples() {
        let c2 = g("cyclic:2");
        let e = exponential(&c2, &BurnsideElement::transitive(2, 0));
        assert_eq!(e.bits.to_bit_string(), "01");
        assert_eq!(exponential_image(&g("dihedral:3")).dim(), 3);
        assert_eq!(exponential_image(&g("dihedral:5")).dim(), 2);
    }
}
