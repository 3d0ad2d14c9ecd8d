use std::collections::HashSet;

use super::{FiniteGroup, GroupMap};
use crate::elemset::ElementSet;
use crate::error::{Error, Result};

/// A section `top/bottom` with `bottom` normal in `top`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Section {
    pub top: ElementSet,
    pub bottom: ElementSet,
}

impl Section {
    pub fn quotient_order(&self) -> usize {
        self.top.len() / self.bottom.len()
    }
}

/// `G/N` with cosets numbered by their least element, plus the projection.
pub fn quotient_group(g: &FiniteGroup, n: &ElementSet) -> Result<(FiniteGroup, GroupMap)> {
    if !g.is_subgroup(n) || !g.is_normal(n) {
        return Err(Error::NotNormal);
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        for y in n {
            coset_of[g.mul(x, y)] = reps.len();
        }
        reps.push(x);
    }
    let q = reps.len();
    let mut table = vec![0u16; q * q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            table[i * q + j] = coset_of[g.mul(a, b)] as u16;
        }
    }
    let label = format!("{}/[{}]", g.label(), n.len());
    let quotient = FiniteGroup::from_table(label, q, table)?;
    Ok((quotient, GroupMap { image: coset_of }))
}

/// `H` as a group in its own right, with the inclusion into `G`.
///
/// Elements of the new group follow the ascending order of their parent
/// indices, so the identity stays at `0`.
pub fn subgroup_group(g: &FiniteGroup, h: &ElementSet) -> (FiniteGroup, GroupMap) {
    let elems: Vec<usize> = h.iter().collect();
    let mut local = vec![usize::MAX; g.order()];
    for (i, &x) in elems.iter().enumerate() {
        local[x] = i;
    }
    let k = elems.len();
    let mut table = vec![0u16; k * k];
    for (i, &a) in elems.iter().enumerate() {
        for (j, &b) in elems.iter().enumerate() {
            table[i * k + j] = local[g.mul(a, b)] as u16;
        }
    }
    let label = if k == g.order() {
        g.label().to_string()
    } else {
        format!("{}<{}>", g.label(), k)
    };
    let sub = FiniteGroup::from_table(label, k, table).expect("subgroup table");
    (sub, GroupMap { image: elems })
}

fn is_normal_in(g: &FiniteGroup, b: &ElementSet, a_gens: &[usize]) -> bool {
    let b_gens = g.subgroup_generators(b);
    a_gens.iter().all(|&x| g.normalizes(x, b, &b_gens))
}

/// Every section `(A, B)` with `B ⊴ A ≤ G`.
pub fn sections(g: &FiniteGroup, proper_only: bool) -> Vec<Section> {
    let subs = g.lattice().subgroups();
    let mut out = Vec::new();
    for a in subs {
        let a_gens = g.subgroup_generators(a);
        for b in subs {
            if b.len() > a.len() || !b.is_subset(a) {
                continue;
            }
            if proper_only && a.len() / b.len() >= g.order() {
                continue;
            }
            if is_normal_in(g, b, &a_gens) {
                out.push(Section { top: *a, bottom: *b });
            }
        }
    }
    out
}

/// One representative per `G`-conjugacy class of sections. The top is the
/// class representative of its subgroup class; the bottom is the least
/// conjugate under the normalizer of the top.
pub fn section_classes(g: &FiniteGroup, proper_only: bool) -> Vec<Section> {
    let lat = g.lattice();
    let mut out = Vec::new();
    for class in lat.classes() {
        let a = class.rep;
        let a_gens = g.subgroup_generators(&a);
        let norm_gens = g.subgroup_generators(&class.normalizer);
        let mut done: HashSet<ElementSet> = HashSet::new();
        for b in lat.subgroups_of(&a) {
            if proper_only && a.len() / b.len() >= g.order() {
                continue;
            }
            if done.contains(&b) || !is_normal_in(g, &b, &a_gens) {
                continue;
            }
            let mut orbit = vec![b];
            done.insert(b);
            let mut i = 0;
            while i < orbit.len() {
                for &t in &norm_gens {
                    let c = g.conjugate_set(t, &orbit[i]);
                    if done.insert(c) {
                        orbit.push(c);
                    }
                }
                i += 1;
            }
            let bottom = orbit
                .into_iter()
                .min_by(|x, y| x.lex_cmp(y))
                .expect("orbit");
            out.push(Section { top: a, bottom });
        }
    }
    out
}

/// Least element of each double coset `L g H`, in ascending order.
pub fn double_coset_reps(g: &FiniteGroup, l: &ElementSet, h: &ElementSet) -> Vec<usize> {
    let mut covered = ElementSet::empty();
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if covered.contains(x) {
            continue;
        }
        reps.push(x);
        for a in l {
            let ax = g.mul(a, x);
            for b in h {
                covered.insert(g.mul(ax, b));
            }
        }
    }
    reps
}

/// The groups attached to a section `A/B` of `G`.
#[derive(Clone, Debug)]
pub struct SectionGroups {
    pub top: FiniteGroup,
    /// `A -> G`.
    pub embed: GroupMap,
    pub quotient: FiniteGroup,
    /// `A -> A/B`.
    pub proj: GroupMap,
}

impl SectionGroups {
    pub fn new(g: &FiniteGroup, s: &Section) -> Result<Self> {
        let (top, embed) = subgroup_group(g, &s.top);
        let local = embed.preimage_set(&s.bottom);
        let (quotient, proj) = quotient_group(&top, &local)?;
        Ok(SectionGroups {
            top,
            embed,
            quotient,
            proj,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{construct_group, is_isomorphic};

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let g = construct_group("cyclic:4").unwrap();
        let (q, p) = quotient_group(&g, &g.all()).unwrap();
        assert_eq!(q.order(), 1);
        assert!(p.is_homomorphism(&g, &q));
    }

    #[test]
    fn d12_mod_c3_is_klein() {
        let g = construct_group("dihedral:6").unwrap();
        let c3 = g.generate(&[2]);
        assert_eq!(c3.len(), 3);
        let (q, p) = quotient_group(&g, &c3).unwrap();
        assert!(p.is_homomorphism(&g, &q));
        let v4 = construct_group("abelian:2,2").unwrap();
        assert!(is_isomorphic(&q, &v4).is_some());
    }

    #[test]
    fn non_normal_rejected() {
        let g = construct_group("dihedral:3").unwrap();
        let s = g.generate(&[3]);
        assert_eq!(quotient_group(&g, &s).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn section_counts() {
        let t = construct_group("cyclic:1").unwrap();
        assert_eq!(sections(&t, false).len(), 1);
        let c2 = construct_group("cyclic:2").unwrap();
        assert_eq!(sections(&c2, false).len(), 3);
        assert_eq!(sections(&c2, true).len(), 2);
    }

    #[test]
    fn s3_sections_have_small_quotients() {
        let g = construct_group("dihedral:3").unwrap();
        let all = sections(&g, false);
        // subgroups: 1, three C2, C3, G; normal pairs counted by hand
        assert_eq!(all.len(), 1 + 3 * 2 + 2 + 3);
        for s in &all {
            assert!([1, 2, 3, 6].contains(&s.quotient_order()));
        }
        assert_eq!(section_classes(&g, false).len(), 1 + 2 + 2 + 3);
    }

    #[test]
    fn double_cosets_partition() {
        for p in [3usize, 5, 7] {
            let g = construct_group(&format!("dihedral:{p}")).unwrap();
            let x = g.generate(&[p]);
            let reps = double_coset_reps(&g, &x, &x);
            assert_eq!(reps.len(), 1 + (p - 1) / 2);
        }
        let g = construct_group("dihedral:3").unwrap();
        let c3 = g.generate(&[1]);
        let c2 = g.generate(&[3]);
        assert_eq!(double_coset_reps(&g, &c3, &c2).len(), 1);
        let c2g = construct_group("cyclic:2").unwrap();
        let one = ElementSet::singleton(0);
        assert_eq!(double_coset_reps(&c2g, &one, &one).len(), 2);
    }
}
