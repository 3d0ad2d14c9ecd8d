use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{
    abelian_invariants, c_prime_core, recognize_pseudodihedral, section_classes, subgroup_group,
    FiniteGroup, GroupSpec, SectionGroups,
};
use crate::units::{inflate, tensor_induce, unit_group_with_cap, UnitSubspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ResidualReason {
    #[serde(rename = "trivial")]
    Trivial,
    #[serde(rename = "d2p-1mod4")]
    D2p1Mod4,
    #[serde(rename = "pd-composite-ok")]
    PdCompositeOk,
    #[serde(rename = "excluded-d8")]
    ExcludedD8,
    #[serde(rename = "n2-is-2")]
    N2Is2,
    #[serde(rename = "has-q-squared")]
    HasQSquared,
    #[serde(rename = "p-3mod4")]
    P3Mod4,
    #[serde(rename = "not-pd-or-trivial")]
    NotPdOrTrivial,
}

impl fmt::Display for ResidualReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ResidualReason::Trivial => "trivial",
            ResidualReason::D2p1Mod4 => "d2p-1mod4",
            ResidualReason::PdCompositeOk => "pd-composite-ok",
            ResidualReason::ExcludedD8 => "excluded-d8",
            ResidualReason::N2Is2 => "n2-is-2",
            ResidualReason::HasQSquared => "has-q-squared",
            ResidualReason::P3Mod4 => "p-3mod4",
            ResidualReason::NotPdOrTrivial => "not-pd-or-trivial",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifierVerdict {
    pub residual: bool,
    pub reason: ResidualReason,
}

/// Canonical spec of a trivial or pseudodihedral group: `cyclic:1`, or
/// `pd:` followed by the invariants of `N`.
pub fn canonical_spec(g: &FiniteGroup) -> Option<String> {
    if g.order() == 1 {
        return Some("cyclic:1".into());
    }
    let w = recognize_pseudodihedral(g)?;
    let (n, _) = subgroup_group(g, &w.n);
    let inv = abelian_invariants(&n).ok()?;
    Some(GroupSpec::Pseudodihedral(inv).to_string())
}

/// Residuality decided from the structure of `G` alone.
pub fn classify_residual(g: &FiniteGroup) -> ClassifierVerdict {
    let verdict = |residual, reason| ClassifierVerdict { residual, reason };
    if g.order() == 1 {
        return verdict(true, ResidualReason::Trivial);
    }
    let Some(w) = recognize_pseudodihedral(g) else {
        return verdict(false, ResidualReason::NotPdOrTrivial);
    };
    let n = w.n.len();
    if n == 4 {
        return verdict(false, ResidualReason::ExcludedD8);
    }
    if is_prime(n) {
        return if n % 4 == 1 {
            verdict(true, ResidualReason::D2p1Mod4)
        } else {
            verdict(false, ResidualReason::P3Mod4)
        };
    }
    if n % 4 == 2 {
        return verdict(false, ResidualReason::N2Is2);
    }
    let q_squared = w.n.iter().any(|y| {
        let o = g.elem_order(y);
        let odd = o >> o.trailing_zeros();
        (3..=odd).any(|q| is_prime(q) && odd.is_multiple_of(q * q))
    });
    if q_squared {
        return verdict(false, ResidualReason::HasQSquared);
    }
    verdict(true, ResidualReason::PdCompositeOk)
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p))
}

/// Span of `Ten_A Inf_{A/B} B^×(A/B)` over sections with `|A/B| < |G|`.
pub fn boundary_subspace(g: &FiniteGroup, cap: usize) -> Result<UnitSubspace> {
    let k = g.lattice().class_count();
    let mut out = UnitSubspace::zero(k);
    for s in section_classes(g, true) {
        let sg = SectionGroups::new(g, &s)?;
        for u in unit_group_with_cap(&sg.quotient, cap)?.basis() {
            let a = inflate(&sg.quotient, &u, &sg.top, &sg.proj);
            out.insert(&tensor_induce(&sg.top, &a, g, &sg.embed));
        }
    }
    Ok(out)
}

/// Whether the images from smaller groups miss part of `B^×(G)`.
pub fn is_residual(g: &FiniteGroup, cap: usize) -> Result<bool> {
    let all = unit_group_with_cap(g, cap)?;
    Ok(boundary_subspace(g, cap)?.dim() < all.dim())
}

/// A finite set of residual groups, by canonical spec, sorted by order and
/// then by spec.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ResidualSet {
    members: Vec<String>,
}

fn spec_order(s: &str) -> usize {
    s.parse::<GroupSpec>()
        .ok()
        .and_then(|g| g.order())
        .unwrap_or(usize::MAX)
}

impl ResidualSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, spec: String) -> bool {
        if self.members.contains(&spec) {
            return false;
        }
        self.members.push(spec);
        self.members
            .sort_by(|a, b| spec_order(a).cmp(&spec_order(b)).then_with(|| a.cmp(b)));
        true
    }

    pub fn contains(&self, spec: &str) -> bool {
        self.members.iter().any(|m| m == spec)
    }

    pub fn members(&self) -> &[String] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset(&self, other: &ResidualSet) -> bool {
        self.members.iter().all(|m| other.contains(m))
    }

    pub fn without(&self, spec: &str) -> ResidualSet {
        ResidualSet {
            members: self.members.iter().filter(|m| *m != spec).cloned().collect(),
        }
    }

    pub fn union(&self, other: &ResidualSet) -> ResidualSet {
        let mut out = self.clone();
        for m in &other.members {
            out.insert(m.clone());
        }
        out
    }
}

impl FromIterator<String> for ResidualSet {
    fn from_iter<I: IntoIterator<Item = String>>(iter: I) -> Self {
        let mut s = ResidualSet::new();
        for m in iter {
            s.insert(m);
        }
        s
    }
}

/// Residual subquotients of `G`, up to isomorphism.
pub fn residual_subquotients(g: &FiniteGroup) -> Result<ResidualSet> {
    if c_prime_core(g).is_none() {
        return Err(Error::NotInCPrime(g.label().to_string()));
    }
    let mut out = ResidualSet::new();
    for s in section_classes(g, false) {
        let q = s.quotient_order();
        if q == 1 {
            out.insert("cyclic:1".into());
            continue;
        }
        if q % 2 == 1 || q < 6 {
            continue;
        }
        let sg = SectionGroups::new(g, &s)?;
        if classify_residual(&sg.quotient).residual {
            if let Some(spec) = canonical_spec(&sg.quotient) {
                out.insert(spec);
            }
        }
    }
    Ok(out)
}

/// Residual subquotient closure of a list of groups.
pub fn closure(groups: &[FiniteGroup]) -> Result<ResidualSet> {
    let mut out = ResidualSet::new();
    for g in groups {
        out = out.union(&residual_subquotients(g)?);
    }
    Ok(out)
}
