use super::FiniteGroup;
use crate::elemset::ElementSet;

/// `G = <x> ⋉ N` with `x` an involution inverting the abelian subgroup `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PseudodihedralWitness {
    pub x: usize,
    pub n: ElementSet,
}

pub(crate) fn set_is_abelian(g: &FiniteGroup, s: &ElementSet) -> bool {
    let gens = g.subgroup_generators(s);
    gens.iter()
        .all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

fn two_part(n: usize) -> usize {
    1 << n.trailing_zeros()
}

/// Finds `x` and `N` with `G = <x> ⋉ N`, `N` abelian of order greater
/// than 2 with cyclic Sylow 2-subgroup, and `x` acting by inversion.
/// Cyclic candidates for `N` are tried first.
pub fn recognize_pseudodihedral(g: &FiniteGroup) -> Option<PseudodihedralWitness> {
    let order = g.order();
    if !order.is_multiple_of(2) || order < 6 {
        return None;
    }
    let lat = g.lattice();
    let mut candidates: Vec<&ElementSet> = lat
        .subgroups()
        .iter()
        .filter(|s| s.len() * 2 == order)
        .collect();
    let is_cyclic = |s: &ElementSet| s.iter().any(|x| g.elem_order(x) == s.len());
    candidates.sort_by_key(|s| !is_cyclic(s));
    for n in candidates {
        if !set_is_abelian(g, n) {
            continue;
        }
        let t = two_part(n.len());
        if t > 1 && !n.iter().any(|y| g.elem_order(y) == t) {
            continue;
        }
        let gens = g.subgroup_generators(n);
        let found = (0..order).find(|&x| {
            !n.contains(x)
                && g.elem_order(x) == 2
                && gens.iter().all(|&y| g.conj(x, y) == g.inv(y))
        });
        if let Some(x) = found {
            return Some(PseudodihedralWitness { x, n: *n });
        }
    }
    None
}

pub fn has_abelian_subgroup_of_index_at_most_two(g: &FiniteGroup) -> bool {
    g.lattice()
        .subgroups()
        .iter()
        .filter(|s| s.len() * 2 >= g.order())
        .any(|s| set_is_abelian(g, s))
}

/// The least normal subgroup of odd index containing an abelian subgroup
/// of index at most 2, or `None` when no such subgroup exists.
pub fn c_prime_core(g: &FiniteGroup) -> Option<ElementSet> {
    let lat = g.lattice();
    lat.normal_subgroups().into_iter().find(|n| {
        (g.order() / n.len()) % 2 == 1
            && lat
                .subgroups()
                .iter()
                .filter(|a| a.len() * 2 >= n.len() && a.is_subset(n))
                .any(|a| set_is_abelian(g, a))
    })
}
