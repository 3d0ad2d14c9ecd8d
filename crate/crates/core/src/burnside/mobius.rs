use serde::Serialize;

use crate::elemset::ElementSet;
use crate::group::FiniteGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PosetKind {
    Subgroups,
    NormalSubgroups,
}

/// Möbius function of the subgroup poset or the normal-subgroup poset.
#[derive(Clone, Debug)]
pub struct MobiusTable {
    pub kind: PosetKind,
    /// Poset elements in lattice order.
    pub elements: Vec<ElementSet>,
    /// `mu[i][j]`, zero unless `elements[i] <= elements[j]`.
    pub mu: Vec<Vec<i64>>,
}

impl MobiusTable {
    pub fn position(&self, s: &ElementSet) -> Option<usize> {
        self.elements.iter().position(|e| e == s)
    }

    pub fn get(&self, lower: &ElementSet, upper: &ElementSet) -> Option<i64> {
        Some(self.mu[self.position(lower)?][self.position(upper)?])
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.elements[i].is_subset(&self.elements[j])
    }
}

pub fn mobius(g: &FiniteGroup, kind: PosetKind) -> MobiusTable {
    let lat = g.lattice();
    let elements: Vec<ElementSet> = match kind {
        PosetKind::Subgroups => lat.subgroups().to_vec(),
        PosetKind::NormalSubgroups => lat.normal_subgroups(),
    };
    let n = elements.len();
    let le: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| elements[i].is_subset(&elements[j])).collect())
        .collect();
    let mut mu = vec![vec![0i64; n]; n];
    for i in 0..n {
        mu[i][i] = 1;
        for j in i + 1..n {
            if !le[i][j] {
                continue;
            }
            let s: i64 = (i..j).filter(|&k| le[i][k] && le[k][j]).map(|k| mu[i][k]).sum();
            mu[i][j] = -s;
        }
    }
    MobiusTable { kind, elements, mu }
}

/// `μ(K, H)` for every subgroup `K <= H`, in lattice order.
pub fn mobius_below(g: &FiniteGroup, h: &ElementSet) -> Vec<(ElementSet, i64)> {
    let below = g.lattice().subgroups_of(h);
    let n = below.len();
    let mut mu = vec![0i64; n];
    mu[n - 1] = 1;
    for k in (0..n - 1).rev() {
        let s: i64 = (k + 1..n)
            .filter(|&z| below[k].is_subset(&below[z]))
            .map(|z| mu[z])
            .sum();
        mu[k] = -s;
    }
    below.into_iter().zip(mu).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::construct_group;

    fn check_sums(t: &MobiusTable) {
        let n = t.elements.len();
        for i in 0..n {
            assert_eq!(t.mu[i][i], 1);
            for j in 0..n {
                if i != j && t.leq(i, j) {
                    let s: i64 = (0..n).filter(|&k| t.leq(i, k) && t.leq(k, j)).map(|k| t.mu[i][k]).sum();
                    assert_eq!(s, 0);
                }
            }
        }
    }

    #[test]
    fn basic_values() {
        let c5 = construct_group("cyclic:5").unwrap();
        let t = mobius(&c5, PosetKind::Subgroups);
        assert_eq!(t.get(&ElementSet::singleton(0), &c5.all()), Some(-1));

        let v4 = construct_group("abelian:2,2").unwrap();
        let t = mobius(&v4, PosetKind::Subgroups);
        assert_eq!(t.get(&ElementSet::singleton(0), &v4.all()), Some(2));
        check_sums(&t);

        let d8 = construct_group("dihedral:4").unwrap();
        let t = mobius(&d8, PosetKind::NormalSubgroups);
        assert_eq!(t.elements.len(), 6);
        assert_eq!(t.get(&ElementSet::singleton(0), &d8.all()), Some(0));
        check_sums(&t);
        check_sums(&mobius(&d8, PosetKind::Subgroups));
    }

    #[test]
    fn below_matches_full_table() {
        let g = construct_group("dihedral:6").unwrap();
        let t = mobius(&g, PosetKind::Subgroups);
        for h in g.lattice().subgroups() {
            for (k, m) in mobius_below(&g, h) {
                assert_eq!(t.get(&k, h), Some(m));
            }
        }
    }
}
