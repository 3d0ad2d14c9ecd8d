use super::{FiniteGroup, GroupMap};
use crate::elemset::ElementSet;
use crate::error::{Error, Result};

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Invariant factors of an abelian group as prime powers, sorted by prime
/// and then by decreasing exponent (`C12` gives `[4, 3]`).
pub fn abelian_invariants(g: &FiniteGroup) -> Result<Vec<usize>> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let mut out = Vec::new();
    for p in prime_factors(g.order()) {
        // c[k] = #{x : x^(p^k) = 1}
        let mut counts = vec![1usize];
        let mut pk = 1;
        loop {
            pk *= p;
            let c = (0..g.order()).filter(|&x| pk % g.elem_order(x) == 0).count();
            if c == *counts.last().unwrap() {
                break;
            }
            counts.push(c);
        }
        // ranks[k] = number of cyclic factors of order >= p^(k+1)
        let ranks: Vec<usize> = counts
            .windows(2)
            .map(|w| {
                let mut r = 0;
                let mut q = w[1] / w[0];
                while q > 1 {
                    q /= p;
                    r += 1;
                }
                r
            })
            .collect();
        for k in (0..ranks.len()).rev() {
            let next = ranks.get(k + 1).copied().unwrap_or(0);
            for _ in 0..ranks[k] - next {
                out.push(p.pow(k as u32 + 1));
            }
        }
    }
    Ok(out)
}

fn screen(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    if g.order() != h.order() || g.is_abelian() != h.is_abelian() {
        return false;
    }
    if g.order_statistics() != h.order_statistics() || g.center().len() != h.center().len() {
        return false;
    }
    if g.is_abelian() {
        return abelian_invariants(g).ok() == abelian_invariants(h).ok();
    }
    true
}

/// Extends `gens[..k] -> imgs[..k]` over the generated subgroup by
/// right multiplication. Fails on an inconsistency or a collision.
fn extend_partial(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    imgs: &[usize],
) -> Option<(Vec<usize>, ElementSet)> {
    let mut map = vec![usize::MAX; g.order()];
    let mut used = ElementSet::singleton(0);
    map[0] = 0;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let a = queue[i];
        for (&x, &y) in gens.iter().zip(imgs) {
            let b = g.mul(a, x);
            let fb = h.mul(map[a], y);
            if map[b] == usize::MAX {
                if !used.insert(fb) {
                    return None;
                }
                map[b] = fb;
                queue.push(b);
            } else if map[b] != fb {
                return None;
            }
        }
        i += 1;
    }
    Some((map, used))
}

fn search(g: &FiniteGroup, h: &FiniteGroup, all: bool) -> Vec<GroupMap> {
    let gens = g.generators().to_vec();
    let mut out = Vec::new();
    let mut imgs = Vec::with_capacity(gens.len());
    let mut prev_images = ElementSet::singleton(0);
    backtrack(g, h, &gens, &mut imgs, &mut prev_images, all, &mut out);
    out
}

fn backtrack(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    imgs: &mut Vec<usize>,
    prev_images: &mut ElementSet,
    all: bool,
    out: &mut Vec<GroupMap>,
) {
    let k = imgs.len();
    if k == gens.len() {
        let (map, used) = extend_partial(g, h, gens, imgs).expect("checked on extension");
        if used.len() == h.order() && map.iter().all(|&y| y != usize::MAX) {
            out.push(GroupMap { image: map });
        }
        return;
    }
    let want = g.elem_order(gens[k]);
    for y in 0..h.order() {
        if h.elem_order(y) != want || prev_images.contains(y) {
            continue;
        }
        imgs.push(y);
        if let Some((_, used)) = extend_partial(g, h, &gens[..=k], imgs) {
            let saved = *prev_images;
            *prev_images = used;
            backtrack(g, h, gens, imgs, prev_images, all, out);
            *prev_images = saved;
        }
        imgs.pop();
        if !all && !out.is_empty() {
            return;
        }
    }
}

/// An isomorphism `g -> h`, if one exists.
pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Option<GroupMap> {
    if !screen(g, h) {
        return None;
    }
    search(g, h, false).into_iter().next()
}

/// Every automorphism of `g`.
pub fn automorphisms(g: &FiniteGroup) -> Vec<GroupMap> {
    search(g, g, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::construct_group;

    #[test]
    fn invariants() {
        let inv = |s: &str| abelian_invariants(&construct_group(s).unwrap()).unwrap();
        assert_eq!(inv("cyclic:1"), Vec::<usize>::new());
        assert_eq!(inv("abelian:2,2"), vec![2, 2]);
        assert_eq!(inv("cyclic:12"), vec![4, 3]);
        assert_eq!(inv("abelian:2,4,3"), vec![4, 2, 3]);
        assert_eq!(inv("abelian:6,6"), vec![2, 2, 3, 3]);
        assert!(abelian_invariants(&construct_group("dihedral:3").unwrap()).is_err());
    }

    #[test]
    fn iso_examples() {
        let g = |s: &str| construct_group(s).unwrap();
        assert!(is_isomorphic(&g("cyclic:4"), &g("abelian:2,2")).is_none());
        let f = is_isomorphic(&g("pd:1,3"), &g("dihedral:3")).unwrap();
        assert!(f.is_isomorphism(&g("pd:1,3"), &g("dihedral:3")));
        assert!(is_isomorphic(&g("pd:2,3"), &g("dihedral:6")).is_some());
        assert!(is_isomorphic(&g("cyclic:2 x cyclic:3"), &g("cyclic:6")).is_some());
        assert!(is_isomorphic(&g("dihedral:6"), &g("dihedral:3 x cyclic:2")).is_some());
        assert!(is_isomorphic(&g("dihedral:4"), &g("pd:4")).is_some());
    }

    #[test]
    fn automorphism_counts() {
        let g = |s: &str| construct_group(s).unwrap();
        assert_eq!(automorphisms(&g("cyclic:5")).len(), 4);
        assert_eq!(automorphisms(&g("abelian:2,2")).len(), 6);
        assert_eq!(automorphisms(&g("dihedral:3")).len(), 6);
        assert_eq!(automorphisms(&g("dihedral:4")).len(), 8);
        for a in automorphisms(&g("dihedral:5")) {
            assert!(a.is_isomorphism(&g("dihedral:5"), &g("dihedral:5")));
        }
    }
}
