use std::collections::HashMap;

use super::FiniteGroup;
use crate::elemset::ElementSet;

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// Lexicographically least member of the class.
    pub rep: ElementSet,
    pub order: usize,
    /// Indices into [`SubgroupLattice::subgroups`].
    pub members: Vec<usize>,
    pub normalizer: ElementSet,
    pub cyclic: bool,
    pub label: String,
}

impl SubgroupClass {
    pub fn is_normal(&self) -> bool {
        self.members.len() == 1
    }
}

/// All subgroups of a group, grouped into conjugacy classes.
///
/// Classes are sorted by `(order, sorted element orders, least conjugate)`,
/// so index 0 is the trivial subgroup and the last index is the whole group.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    subgroups: Vec<ElementSet>,
    subgroup_class: Vec<usize>,
    index: HashMap<ElementSet, usize>,
    classes: Vec<SubgroupClass>,
    leq: Vec<Vec<bool>>,
}

impl SubgroupLattice {
    pub fn build(g: &FiniteGroup) -> Self {
        let n = g.order();

        // cyclic subgroups with one generator each
        let mut cyclic: Vec<(ElementSet, usize)> = Vec::new();
        let mut seen_cyclic: HashMap<ElementSet, ()> = HashMap::new();
        for x in 0..n {
            let c = g.generate(&[x]);
            if seen_cyclic.insert(c, ()).is_none() {
                cyclic.push((c, x));
            }
        }

        let mut subs: Vec<ElementSet> = Vec::new();
        let mut gens: Vec<Vec<usize>> = Vec::new();
        let mut index: HashMap<ElementSet, usize> = HashMap::new();
        for (c, x) in &cyclic {
            index.insert(*c, subs.len());
            subs.push(*c);
            gens.push(if *x == 0 { vec![] } else { vec![*x] });
        }
        let mut i = 0;
        while i < subs.len() {
            let h = subs[i];
            for (c, x) in &cyclic {
                if c.is_subset(&h) {
                    continue;
                }
                let mut gx = gens[i].clone();
                gx.push(*x);
                let k = g.closure_from(&h, &gx);
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(k) {
                    e.insert(subs.len());
                    subs.push(k);
                    gens.push(gx);
                }
            }
            i += 1;
        }

        let mut order: Vec<usize> = (0..subs.len()).collect();
        order.sort_by(|&a, &b| {
            subs[a]
                .len()
                .cmp(&subs[b].len())
                .then_with(|| subs[a].lex_cmp(&subs[b]))
        });
        let subs: Vec<ElementSet> = order.iter().map(|&k| subs[k]).collect();
        let gens: Vec<Vec<usize>> = order.iter().map(|&k| gens[k].clone()).collect();
        let index: HashMap<ElementSet, usize> =
            subs.iter().enumerate().map(|(k, s)| (*s, k)).collect();

        // conjugacy classes
        let ggens = g.generators().to_vec();
        let mut assigned = vec![usize::MAX; subs.len()];
        let mut raw: Vec<(Vec<usize>, SubgroupClass)> = Vec::new();
        for s in 0..subs.len() {
            if assigned[s] != usize::MAX {
                continue;
            }
            let mut members = vec![s];
            assigned[s] = raw.len();
            let mut j = 0;
            while j < members.len() {
                let h = subs[members[j]];
                for &t in &ggens {
                    let c = g.conjugate_set(t, &h);
                    let ci = index[&c];
                    if assigned[ci] == usize::MAX {
                        assigned[ci] = raw.len();
                        members.push(ci);
                    }
                }
                j += 1;
            }
            members.sort_unstable();
            let rep = members
                .iter()
                .map(|&m| subs[m])
                .min_by(|a, b| a.lex_cmp(b))
                .expect("nonempty class");
            let rep_gens = &gens[index[&rep]];
            let normalizer: ElementSet =
                (0..n).filter(|&x| g.normalizes(x, &rep, rep_gens)).collect();
            let mut stats: Vec<usize> = rep.iter().map(|x| g.elem_order(x)).collect();
            stats.sort_unstable();
            let cyclic = rep.iter().any(|x| g.elem_order(x) == rep.len());
            raw.push((
                stats,
                SubgroupClass {
                    order: rep.len(),
                    rep,
                    members,
                    normalizer,
                    cyclic,
                    label: String::new(),
                },
            ));
        }
        raw.sort_by(|(sa, a), (sb, b)| {
            a.order
                .cmp(&b.order)
                .then_with(|| sa.cmp(sb))
                .then_with(|| a.rep.lex_cmp(&b.rep))
        });
        let mut classes: Vec<SubgroupClass> = raw.into_iter().map(|(_, c)| c).collect();

        let mut subgroup_class = vec![0; subs.len()];
        for (ci, c) in classes.iter().enumerate() {
            for &m in &c.members {
                subgroup_class[m] = ci;
            }
        }

        let mut base: Vec<String> = classes
            .iter()
            .map(|c| {
                if c.order == 1 {
                    "1".to_string()
                } else if c.order == n {
                    "G".to_string()
                } else if c.cyclic {
                    format!("C{}", c.order)
                } else {
                    format!("H{}", c.order)
                }
            })
            .collect();
        let mut counts: HashMap<String, usize> = HashMap::new();
        for b in &base {
            *counts.entry(b.clone()).or_default() += 1;
        }
        let mut running: HashMap<String, usize> = HashMap::new();
        for b in base.iter_mut() {
            if counts[b.as_str()] > 1 {
                let k = running.entry(b.clone()).or_default();
                *k += 1;
                *b = format!("{b}#{k}");
            }
        }
        for (c, l) in classes.iter_mut().zip(base) {
            c.label = l;
        }

        let k = classes.len();
        let mut leq = vec![vec![false; k]; k];
        for i in 0..k {
            for j in i..k {
                let ri = classes[i].rep;
                leq[i][j] = classes[i].order <= classes[j].order
                    && classes[j].order.is_multiple_of(classes[i].order)
                    && classes[j]
                        .members
                        .iter()
                        .any(|&m| ri.is_subset(&subs[m]));
            }
        }

        SubgroupLattice {
            subgroups: subs,
            subgroup_class,
            index,
            classes,
            leq,
        }
    }

    /// All subgroups, sorted by order and then lexicographically.
    pub fn subgroups(&self) -> &[ElementSet] {
        &self.subgroups
    }

    pub fn subgroup_count(&self) -> usize {
        self.subgroups.len()
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class(&self, i: usize) -> &SubgroupClass {
        &self.classes[i]
    }

    pub fn index_of(&self, set: &ElementSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    /// Class index of an arbitrary subgroup.
    pub fn class_of(&self, set: &ElementSet) -> Option<usize> {
        self.index_of(set).map(|i| self.subgroup_class[i])
    }

    pub fn class_of_subgroup(&self, i: usize) -> usize {
        self.subgroup_class[i]
    }

    /// Whether class `i` is subconjugate to class `j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn top(&self) -> usize {
        self.classes.len() - 1
    }

    pub fn labels(&self) -> Vec<String> {
        self.classes.iter().map(|c| c.label.clone()).collect()
    }

    /// Normal subgroups in lattice order.
    pub fn normal_subgroups(&self) -> Vec<ElementSet> {
        self.classes
            .iter()
            .filter(|c| c.is_normal())
            .map(|c| c.rep)
            .collect()
    }

    /// Subgroups contained in `h`, in lattice order.
    pub fn subgroups_of(&self, h: &ElementSet) -> Vec<ElementSet> {
        self.subgroups
            .iter()
            .filter(|s| s.len() <= h.len() && s.is_subset(h))
            .copied()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use crate::group::construct_group;

    fn counts(spec: &str) -> (usize, usize) {
        let g = construct_group(spec).unwrap();
        let l = g.lattice();
        (l.subgroup_count(), l.class_count())
    }

    #[test]
    fn known_counts() {
        assert_eq!(counts("cyclic:1"), (1, 1));
        assert_eq!(counts("cyclic:2"), (2, 2));
        assert_eq!(counts("dihedral:3"), (6, 4));
        assert_eq!(counts("dihedral:4"), (10, 8));
        assert_eq!(counts("abelian:2,2"), (5, 5));
        assert_eq!(counts("cyclic:12"), (6, 6));
    }

    #[test]
    fn class_sizes_are_normalizer_indices() {
        for spec in ["dihedral:4", "dihedral:6", "pd:4,3", "dihedral:5 x cyclic:3"] {
            let g = construct_group(spec).unwrap();
            let l = g.lattice();
            let mut total = 0;
            for c in l.classes() {
                assert_eq!(c.members.len() * c.normalizer.len(), g.order(), "{spec}");
                total += c.members.len();
            }
            assert_eq!(total, l.subgroup_count());
        }
    }

    #[test]
    fn leq_is_a_partial_order() {
        let g = construct_group("dihedral:6").unwrap();
        let l = g.lattice();
        let k = l.class_count();
        for i in 0..k {
            assert!(l.leq(i, i));
            assert!(l.leq(0, i));
            assert!(l.leq(i, l.top()));
            for j in 0..k {
                if i != j {
                    assert!(!(l.leq(i, j) && l.leq(j, i)));
                }
                for m in 0..k {
                    if l.leq(i, j) && l.leq(j, m) {
                        assert!(l.leq(i, m));
                    }
                }
            }
        }
    }

    #[test]
    fn labels_for_s3() {
        let g = construct_group("dihedral:3").unwrap();
        assert_eq!(g.lattice().labels(), vec!["1", "C2", "C3", "G"]);
    }

    #[test]
    fn labels_disambiguate() {
        let g = construct_group("dihedral:4").unwrap();
        let labels = g.lattice().labels();
        assert!(labels.contains(&"C2#1".to_string()));
        assert!(labels.contains(&"H4#2".to_string()));
    }
}
