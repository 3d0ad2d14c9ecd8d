//! The bilinear form on sections whose rank is `dim S_{H,F2}(G)`.

use rayon::prelude::*;

use crate::f2::{rank, F2Vec};
use crate::group::{
    double_coset_reps, is_isomorphic, section_classes, FiniteGroup, Section, SectionGroups,
};
use crate::error::Result;

/// One section `(T, S)` per conjugacy class with `T/S ≅ H`.
pub fn section_basis(g: &FiniteGroup, h: &FiniteGroup) -> Result<Vec<Section>> {
    let mut out = Vec::new();
    for s in section_classes(g, false) {
        if s.quotient_order() != h.order() {
            continue;
        }
        let sg = SectionGroups::new(g, &s)?;
        if is_isomorphic(h, &sg.quotient).is_some() {
            out.push(s);
        }
    }
    Ok(out)
}

/// `(B, A)` is linked to `(T, S)` when `B ∩ S = A ∩ T`, `(B ∩ T)A = B` and
/// `(B ∩ T)S = T`.
pub fn linked(g: &FiniteGroup, x: &Section, y: &Section) -> bool {
    let (b, a) = (x.top, x.bottom);
    let (t, s) = (y.top, y.bottom);
    let bt = b.intersection(&t);
    b.intersection(&s) == a.intersection(&t)
        && g.set_product(&bt, &a) == b
        && g.set_product(&bt, &s) == t
}

fn conjugate(g: &FiniteGroup, h: usize, s: &Section) -> Section {
    Section {
        top: g.conjugate_set(h, &s.top),
        bottom: g.conjugate_set(h, &s.bottom),
    }
}

/// Entry `(i, j)` is the parity of the number of `h ∈ [B\G/T]` with
/// `basis[i] = (B, A)` linked to the `h`-conjugate of `basis[j] = (T, S)`.
pub fn gram_matrix(g: &FiniteGroup, basis: &[Section]) -> Vec<F2Vec> {
    basis
        .par_iter()
        .map(|x| {
            F2Vec::from_bools(basis.iter().map(|y| {
                double_coset_reps(g, &x.top, &y.top)
                    .into_iter()
                    .filter(|&h| linked(g, x, &conjugate(g, h, y)))
                    .count()
                    % 2
                    == 1
            }))
        })
        .collect()
}

/// `dim S_{H,F2}(G)` as the rank of the Gram matrix.
pub fn gram_rank(h: &FiniteGroup, g: &FiniteGroup) -> Result<usize> {
    let basis = section_basis(g, h)?;
    Ok(rank(&gram_matrix(g, &basis)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::construct_group;

    fn g(s: &str) -> FiniteGroup {
        construct_group(s).unwrap()
    }

    #[test]
    fn c2_trivial() {
        let c2 = g("cyclic:2");
        let t = g("cyclic:1");
        let basis = section_basis(&c2, &t).unwrap();
        assert_eq!(basis.len(), 2);
        let m = gram_matrix(&c2, &basis);
        assert_eq!(m[0].to_bit_string(), "01");
        assert_eq!(m[1].to_bit_string(), "11");
        assert_eq!(gram_rank(&t, &c2).unwrap(), 2);
        assert_eq!(gram_rank(&t, &g("abelian:2,2")).unwrap(), 4);
    }

    #[test]
    fn bases() {
        let d10 = g("dihedral:5");
        assert_eq!(section_basis(&d10, &d10).unwrap().len(), 1);
        let s3 = g("dihedral:3");
        assert_eq!(section_basis(&s3, &g("cyclic:3")).unwrap().len(), 1);
    }

    #[test]
    fn gram_is_symmetric() {
        let d8 = g("dihedral:4");
        for h in ["cyclic:1", "cyclic:2", "abelian:2,2"] {
            let basis = section_basis(&d8, &g(h)).unwrap();
            let m = gram_matrix(&d8, &basis);
            for i in 0..m.len() {
                for j in 0..m.len() {
                    assert_eq!(m[i].get(j), m[j].get(i));
                }
            }
        }
    }

    #[test]
    fn some_pair_is_not_linked() {
        let d8 = g("dihedral:4");
        let v4 = g("abelian:2,2");
        let basis = section_basis(&d8, &v4).unwrap();
        let full: Vec<_> = basis.iter().filter(|s| s.bottom.len() == 1).collect();
        assert!(full.len() >= 2);
        assert!(!linked(&d8, full[0], full[1]));
    }

    #[test]
    fn residual_self_rank() {
        let d10 = g("dihedral:5");
        assert_eq!(gram_rank(&d10, &d10).unwrap(), 1);
    }
}
