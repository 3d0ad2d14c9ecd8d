use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::mobius::{mobius, PosetKind};
use super::{mobius_below, table_of_marks};
use crate::elemset::ElementSet;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// A rational combination of transitive sets, indexed by class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalIdempotent {
    pub class: usize,
    pub coeffs: Vec<BigRational>,
}

/// `e_H = 1/|N_G(H)| Σ_{K <= H} |K| μ(K, H) [G/K]`, summed over subgroups
/// and then collected by class.
pub fn gluck_idempotent(g: &FiniteGroup, h: usize) -> RationalIdempotent {
    let lat = g.lattice();
    let class = lat.class(h);
    let denom = BigInt::from(class.normalizer.len());
    let mut coeffs = vec![BigRational::zero(); lat.class_count()];
    for (k, mu) in mobius_below(g, &class.rep) {
        if mu == 0 {
            continue;
        }
        let c = lat.class_of(&k).expect("subgroup");
        coeffs[c] += BigRational::new(BigInt::from(k.len() as i64 * mu), denom.clone());
    }
    RationalIdempotent { class: h, coeffs }
}

pub fn marks_of_rational(g: &FiniteGroup, coeffs: &[BigRational]) -> Vec<BigRational> {
    let m = table_of_marks(g);
    let k = m.size();
    (0..k)
        .map(|h| {
            (h..k)
                .filter(|&j| m.get(h, j) != 0)
                .map(|j| &coeffs[j] * BigRational::from_integer(BigInt::from(m.get(h, j))))
                .fold(BigRational::zero(), |a, b| a + b)
        })
        .collect()
}

/// Inverse of the ghost map over the rationals.
pub fn ghost_solve_rational(g: &FiniteGroup, v: &[BigRational]) -> Vec<BigRational> {
    let m = table_of_marks(g);
    let k = m.size();
    let mut c = vec![BigRational::zero(); k];
    for h in (0..k).rev() {
        let mut r = v[h].clone();
        for j in h + 1..k {
            if m.get(h, j) != 0 {
                r -= &c[j] * BigRational::from_integer(BigInt::from(m.get(h, j)));
            }
        }
        c[h] = r / BigRational::from_integer(BigInt::from(m.get(h, h)));
    }
    c
}

/// `f_N = Σ_{N <= M ⊴ G} μ⊴(N, M) Inf Def` as a list of `(M, μ⊴(N, M))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FNIdempotent {
    pub n: ElementSet,
    pub terms: Vec<(ElementSet, i64)>,
}

pub fn fn_idempotent(g: &FiniteGroup, n: &ElementSet) -> Result<FNIdempotent> {
    if !g.is_subgroup(n) || !g.is_normal(n) {
        return Err(Error::NotNormal);
    }
    let t = mobius(g, PosetKind::NormalSubgroups);
    let i = t.position(n).ok_or(Error::NotNormal)?;
    let terms = (0..t.elements.len())
        .filter(|&j| t.leq(i, j))
        .map(|j| (t.elements[j], t.mu[i][j]))
        .collect();
    Ok(FNIdempotent { n: *n, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::construct_group;
    use num_traits::One;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn c2_idempotents() {
        let g = construct_group("cyclic:2").unwrap();
        assert_eq!(gluck_idempotent(&g, 1).coeffs, vec![q(-1, 2), q(1, 1)]);
        assert_eq!(gluck_idempotent(&g, 0).coeffs, vec![q(1, 2), q(0, 1)]);
    }

    #[test]
    fn marks_are_indicators() {
        let g = construct_group("dihedral:4").unwrap();
        let k = g.lattice().class_count();
        for h in 0..k {
            let v = marks_of_rational(&g, &gluck_idempotent(&g, h).coeffs);
            for (j, x) in v.iter().enumerate() {
                assert_eq!(x, &if j == h { BigRational::one() } else { BigRational::zero() });
            }
        }
        let e1 = gluck_idempotent(&g, 0);
        assert_eq!(e1.coeffs[0], q(1, 8));
        assert!(e1.coeffs[1..].iter().all(|c| c.is_zero()));
    }

    #[test]
    fn f_idempotent_terms() {
        let g = construct_group("cyclic:2").unwrap();
        let f = fn_idempotent(&g, &ElementSet::singleton(0)).unwrap();
        assert_eq!(f.terms, vec![(ElementSet::singleton(0), 1), (g.all(), -1)]);
        let f = fn_idempotent(&g, &g.all()).unwrap();
        assert_eq!(f.terms, vec![(g.all(), 1)]);

        let d10 = construct_group("dihedral:5").unwrap();
        let f = fn_idempotent(&d10, &ElementSet::singleton(0)).unwrap();
        let mus: Vec<i64> = f.terms.iter().map(|t| t.1).collect();
        assert_eq!(mus, vec![1, -1, 0]);

        let s3 = construct_group("dihedral:3").unwrap();
        assert!(fn_idempotent(&s3, &s3.generate(&[3])).is_err());
    }
}
