use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::closed_form::{s_formula, totient};
use super::residual::{canonical_spec, classify_residual, closure, residual_subquotients, ResidualSet};
use crate::error::{Error, Result};
use crate::group::{
    c_prime_core, construct_group, is_isomorphic, section_classes, subgroup_group, FiniteGroup,
    GroupSpec, SectionGroups,
};
use crate::units::{
    exponential_image, inflate, inflated_phi_family, iso_transport, orbit_sums_induced, phi,
    standard_basis, tensor_induce, unit_group_with_cap, UnitSubspace,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    /// Inflated `Φ` elements whose quotients only involve members of `I`.
    Basis,
    /// Images of `Φ_X`, `X ∈ I`, under every section isomorphic to `X`.
    Generate,
}

/// `F_I(H)` for a closed set `I` of residual groups.
pub fn subfunctor_value(i: &ResidualSet, h: &FiniteGroup, method: Method) -> Result<UnitSubspace> {
    let core = c_prime_core(h).ok_or_else(|| Error::NotInCPrime(h.label().to_string()))?;
    let k = h.lattice().class_count();
    match method {
        Method::Basis => {
            let (n, emb) = subgroup_group(h, &core);
            let family =
                inflated_phi_family(&n, |q| Ok(residual_subquotients(q)?.is_subset(i)))?;
            let units = orbit_sums_induced(h, &core, &n, &emb, &family);
            Ok(UnitSubspace::spanned_by(k, &units))
        }
        Method::Generate => {
            let mut models: HashMap<String, FiniteGroup> = HashMap::new();
            let mut out = UnitSubspace::zero(k);
            for s in section_classes(h, false) {
                let q = s.quotient_order();
                if q != 1 && (q % 2 == 1 || q < 6) {
                    continue;
                }
                let sg = SectionGroups::new(h, &s)?;
                let Some(spec) = canonical_spec(&sg.quotient) else {
                    continue;
                };
                if !i.contains(&spec) {
                    continue;
                }
                if !models.contains_key(&spec) {
                    models.insert(spec.clone(), construct_group(&spec)?);
                }
                let x = &models[&spec];
                let f = is_isomorphic(x, &sg.quotient)
                    .ok_or_else(|| Error::InvalidArgument(format!("{spec} is not a model")))?;
                let phi_q = iso_transport(x, &phi(x)?.unit, &sg.quotient, &f)?;
                let a = inflate(&sg.quotient, &phi_q, &sg.top, &sg.proj);
                out.insert(&tensor_induce(&sg.top, &a, h, &sg.embed));
            }
            Ok(out)
        }
    }
}

/// `dim S_{G,F2}(H)` as `dim F_{cl{G}}(H) - dim F_{cl{G} \ {G}}(H)`.
pub fn simple_dim(g: &FiniteGroup, h: &FiniteGroup) -> Result<usize> {
    if !classify_residual(g).residual {
        return Err(Error::NotResidual(g.label().to_string()));
    }
    let spec = canonical_spec(g).expect("residual groups are trivial or pseudodihedral");
    let full = closure(std::slice::from_ref(g))?;
    let lower = full.without(&spec);
    let a = subfunctor_value(&full, h, Method::Basis)?.dim();
    let b = subfunctor_value(&lower, h, Method::Basis)?.dim();
    Ok(a - b)
}

/// Composition factors of `B^×` over `G`, each with multiplicity 1, in
/// increasing order.
pub fn composition_factors_over(g: &FiniteGroup) -> Result<Vec<(String, usize)>> {
    Ok(residual_subquotients(g)?
        .members()
        .iter()
        .map(|m| (m.clone(), 1))
        .collect())
}

/// Whether `ε_G` is onto, comparing `dim Im ε_G` with `dim B^×(G)`.
pub fn expo_surjective(g: &FiniteGroup, cap: usize) -> Result<bool> {
    if c_prime_core(g).is_none() {
        return Err(Error::NotInCPrime(g.label().to_string()));
    }
    let total = match unit_group_with_cap(g, cap) {
        Ok(u) => u.dim(),
        Err(Error::EnumerationCap { .. }) => standard_basis(g)?.dim(),
        Err(e) => return Err(e),
    };
    Ok(exponential_image(g).dim() == total)
}

/// `ε_{D_{2n}}` is onto exactly when `φ(n) ≡ 2 mod 4`.
pub fn expo_surjective_dihedral(n: u64) -> bool {
    totient(n) % 4 == 2
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub n: u64,
    pub dim_bx: usize,
    pub s_n: u64,
    pub expo_surjective: bool,
    pub residual: bool,
}

/// One row per `D_{2n}`, `n` in `nmin..=nmax`, computed in parallel.
pub fn dihedral_scan(nmin: u64, nmax: u64, cap: usize) -> Result<Vec<ScanRow>> {
    (nmin..=nmax)
        .into_par_iter()
        .map(|n| {
            let g = GroupSpec::Dihedral(n as usize).build()?;
            let dim_bx = unit_group_with_cap(&g, cap)?.dim();
            Ok(ScanRow {
                n,
                dim_bx,
                s_n: s_formula(n),
                expo_surjective: exponential_image(&g).dim() == dim_bx,
                residual: classify_residual(&g).residual,
            })
        })
        .collect()
}
