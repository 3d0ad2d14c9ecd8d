//! Structural identities checked over a built-in corpus of groups.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::burnside::{ghost_solve, ghost_solve_rational, gluck_idempotent, marks_of, marks_of_rational, mobius, table_of_marks, BurnsideElement, PosetKind};
use crate::elemset::ElementSet;
use crate::error::Result;
use crate::functor::{
    classify_residual, closure, composition_factors_over, expo_surjective,
    expo_surjective_dihedral, is_residual, residual_subquotients, simple_dim, subfunctor_value,
    Method, ResidualSet,
};
use crate::group::{
    automorphisms, c_prime_core, construct_group, double_coset_reps, is_isomorphic,
    quotient_group, recognize_pseudodihedral, section_classes, subgroup_group, FiniteGroup,
    GroupMap, SectionGroups,
};
use crate::simple_form::{gram_matrix, gram_rank, section_basis};
use crate::units::{
    exponential_image, faithful_part, inflate, iso_transport, phi, restrict, standard_basis,
    tensor_induce, unit_group_with_cap, Unit, UnitSubspace,
};

/// Specs of the built-in corpus.
pub fn corpus() -> Vec<String> {
    let mut v: Vec<String> = (3..=15).map(|n| format!("dihedral:{n}")).collect();
    v.extend(
        [
            "cyclic:2",
            "cyclic:1",
            "pd:1,3,3",
            "pd:4,3",
            "pd:1,9",
            "dihedral:5 x cyclic:3",
        ]
        .map(String::from),
    );
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub group: String,
    pub passed: bool,
    pub detail: String,
}

/// Every element of a subspace.
pub fn all_units(s: &UnitSubspace) -> Vec<Unit> {
    let basis = s.basis();
    let mut out = vec![Unit::identity(s.classes())];
    for b in &basis {
        let more: Vec<Unit> = out.iter().map(|u| u.mul(b)).collect();
        out.extend(more);
    }
    out
}

/// Map from a subgroup `a` of `G` into a larger subgroup `b`, both given
/// by their embeddings into `G`.
fn local_inclusion(g: &FiniteGroup, a: &GroupMap, b: &GroupMap) -> GroupMap {
    let back = b.inverse_partial(g.order());
    GroupMap {
        image: a.image.iter().map(|&x| back[x]).collect(),
    }
}

/// `Res^G_H Ten^G_K = Π_x Ten^H_{H∩xKx^-1} Iso(c_x) Res^K_{x^-1Hx∩K}` for
/// every pair of subgroups and every unit of `K`.
pub fn mackey_holds(g: &FiniteGroup, cap: usize) -> Result<bool> {
    let subs = g.lattice().subgroups().to_vec();
    for hs in &subs {
        let (h, h_emb) = subgroup_group(g, hs);
        for ks in &subs {
            let (k, k_emb) = subgroup_group(g, ks);
            let reps = double_coset_reps(g, hs, ks);
            let mut legs = Vec::new();
            for &x in &reps {
                let s_set = g.conjugate_set(g.inv(x), hs).intersection(ks);
                let t_set = g.conjugate_set(x, &s_set);
                let (s, s_emb) = subgroup_group(g, &s_set);
                let (t, t_emb) = subgroup_group(g, &t_set);
                let s_in_k = local_inclusion(g, &s_emb, &k_emb);
                let t_in_h = local_inclusion(g, &t_emb, &h_emb);
                let t_back = t_emb.inverse_partial(g.order());
                let c = GroupMap {
                    image: s_emb.image.iter().map(|&y| t_back[g.conj(x, y)]).collect(),
                };
                legs.push((s, s_in_k, t, t_in_h, c));
            }
            for u in all_units(&unit_group_with_cap(&k, cap)?) {
                let lhs = restrict(g, &tensor_induce(&k, &u, g, &k_emb), &h, &h_emb);
                let mut rhs = Unit::identity(h.lattice().class_count());
                for (s, s_in_k, t, t_in_h, c) in &legs {
                    let r = restrict(&k, &u, s, s_in_k);
                    let m = iso_transport(s, &r, t, c)?;
                    rhs = rhs.mul(&tensor_induce(t, &m, &h, t_in_h));
                }
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `Ten^G_H Inf^H_{H/N} = Inf^G_{G/N} Ten^{G/N}_{H/N}` for every normal `N`
/// and every `H ⊇ N`.
pub fn commutation_holds(g: &FiniteGroup, cap: usize) -> Result<bool> {
    let lat = g.lattice();
    for ns in lat.normal_subgroups() {
        let (gq, g_proj) = quotient_group(g, &ns)?;
        for hs in lat.subgroups().iter().filter(|h| ns.is_subset(h)) {
            let (h, h_emb) = subgroup_group(g, hs);
            let n_local = h_emb.preimage_set(&ns);
            let (hq, h_proj) = quotient_group(&h, &n_local)?;
            let hbar_set = g_proj.apply_set(hs);
            let (hbar, hbar_emb) = subgroup_group(&gq, &hbar_set);
            let hbar_back = hbar_emb.inverse_partial(gq.order());
            // H/N -> image of H in G/N, through coset representatives
            let mut iso = vec![usize::MAX; hq.order()];
            for y in 0..h.order() {
                let c = h_proj.apply(y);
                if iso[c] == usize::MAX {
                    iso[c] = hbar_back[g_proj.apply(h_emb.apply(y))];
                }
            }
            let iso = GroupMap { image: iso };
            for u in all_units(&unit_group_with_cap(&hq, cap)?) {
                let lhs = tensor_induce(&h, &inflate(&hq, &u, &h, &h_proj), g, &h_emb);
                let moved = iso_transport(&hq, &u, &hbar, &iso)?;
                let rhs = inflate(&gq, &tensor_induce(&hbar, &moved, &gq, &hbar_emb), g, &g_proj);
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// For `N ⊴ G` of odd index: `Ten∘Res` is the identity on `B^×(G)` and
/// `Res∘Ten` is the identity on the `G`-invariant units of `N`.
pub fn odd_index_inverse(g: &FiniteGroup, ns: &ElementSet, cap: usize) -> Result<bool> {
    let (n, emb) = subgroup_group(g, ns);
    for u in all_units(&unit_group_with_cap(g, cap)?) {
        let r = restrict(g, &u, &n, &emb);
        if tensor_induce(&n, &r, g, &emb) != u {
            return Ok(false);
        }
    }
    let back = emb.inverse_partial(g.order());
    for v in all_units(&unit_group_with_cap(&n, cap)?) {
        let invariant = g.generators().iter().all(|&x| {
            let c = GroupMap {
                image: emb.image.iter().map(|&y| back[g.conj(x, y)]).collect(),
            };
            iso_transport(&n, &v, &n, &c).map(|w| w == v).unwrap_or(false)
        });
        if invariant && restrict(g, &tensor_induce(&n, &v, g, &emb), &n, &emb) != v {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `dim B^×(G) = Σ_{N ⊴ G} dim ∂B^×(G/N)`; returns both sides.
pub fn faithful_decomposition(g: &FiniteGroup, cap: usize) -> Result<(usize, usize)> {
    let total = unit_group_with_cap(g, cap)?.dim();
    let mut sum = 0;
    for n in g.lattice().normal_subgroups() {
        let (q, _) = quotient_group(g, &n)?;
        sum += faithful_part(&q, cap)?.dim();
    }
    Ok((total, sum))
}

/// Orthogonality, idempotence, completeness and the mark-indicator property
/// of the primitive idempotents of `QB(G)`.
pub fn idempotents_ok(g: &FiniteGroup) -> bool {
    let k = g.lattice().class_count();
    let es: Vec<Vec<BigRational>> = (0..k).map(|h| gluck_idempotent(g, h).coeffs).collect();
    let ghosts: Vec<Vec<BigRational>> = es.iter().map(|e| marks_of_rational(g, e)).collect();
    for (h, gh) in ghosts.iter().enumerate() {
        for (j, x) in gh.iter().enumerate() {
            let want = if j == h { BigRational::one() } else { BigRational::zero() };
            if *x != want {
                return false;
            }
        }
    }
    for h in 0..k {
        for j in 0..k {
            let prod: Vec<BigRational> = ghosts[h]
                .iter()
                .zip(&ghosts[j])
                .map(|(a, b)| a * b)
                .collect();
            let solved = ghost_solve_rational(g, &prod);
            let want: Vec<BigRational> = if h == j {
                es[h].clone()
            } else {
                vec![BigRational::zero(); k]
            };
            if solved != want {
                return false;
            }
        }
    }
    let mut total = vec![BigRational::zero(); k];
    for e in &es {
        for (t, c) in total.iter_mut().zip(e) {
            *t += c;
        }
    }
    let mut one = vec![BigRational::zero(); k];
    one[k - 1] = BigRational::from_integer(BigInt::one());
    total == one
}

fn outcome(name: &str, group: &str, passed: bool, detail: impl Into<String>) -> CheckOutcome {
    CheckOutcome {
        name: name.to_string(),
        group: group.to_string(),
        passed,
        detail: detail.into(),
    }
}

fn record(out: &mut Vec<CheckOutcome>, name: &str, group: &str, r: Result<(bool, String)>) {
    match r {
        Ok((p, d)) => out.push(outcome(name, group, p, d)),
        Err(e) => out.push(outcome(name, group, false, format!("error: {e}"))),
    }
}

/// Runs the invariant suite over the corpus.
pub fn run_selfcheck(cap: usize) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for spec in corpus() {
        let g = match construct_group(&spec) {
            Ok(g) => g,
            Err(e) => {
                out.push(outcome("construct", &spec, false, e.to_string()));
                continue;
            }
        };
        check_group(&g, &spec, cap, &mut out);
    }
    for spec in ["dihedral:6", "dihedral:4"] {
        let g = construct_group(spec).expect("corpus spec");
        record(&mut out, "mackey", spec, mackey_holds(&g, cap).map(|b| (b, String::new())));
        record(&mut out, "commutation", spec, commutation_holds(&g, cap).map(|b| (b, String::new())));
    }
    let g = construct_group("dihedral:5 x cyclic:3").expect("corpus spec");
    let n: ElementSet = (0..10).collect();
    record(&mut out, "odd-index-inverse", g.label(), odd_index_inverse(&g, &n, cap).map(|b| (b, String::new())));
    out
}

fn check_group(g: &FiniteGroup, spec: &str, cap: usize, out: &mut Vec<CheckOutcome>) {
    let lat = g.lattice();
    let small = g.order() <= 64;
    if small {
        out.push(outcome("axioms", spec, g.check_axioms(), ""));
    }
    let sizes: usize = lat.classes().iter().map(|c| g.order() / c.normalizer.len()).sum();
    out.push(outcome(
        "class-sizes",
        spec,
        sizes == lat.subgroup_count(),
        format!("{sizes} vs {}", lat.subgroup_count()),
    ));
    let k = lat.class_count();
    let po = (0..k).all(|i| {
        lat.leq(i, i)
            && (0..k).all(|j| i == j || !(lat.leq(i, j) && lat.leq(j, i)))
            && (0..k).all(|j| (0..k).all(|m| !(lat.leq(i, j) && lat.leq(j, m)) || lat.leq(i, m)))
    });
    out.push(outcome("leq-partial-order", spec, po, ""));
    let m = table_of_marks(g);
    let tri = (0..k).all(|i| (0..k).all(|j| m.get(i, j) == 0 || lat.leq(i, j)))
        && (0..k).all(|i| m.get(i, i) > 0);
    out.push(outcome("marks-triangular", spec, tri, ""));
    let roundtrip = (0..k).all(|i| {
        let b = BurnsideElement::transitive(k, i);
        ghost_solve(g, &marks_of(g, &b)).as_ref() == Some(&b)
    });
    out.push(outcome("ghost-roundtrip", spec, roundtrip, ""));
    for kind in [PosetKind::Subgroups, PosetKind::NormalSubgroups] {
        if kind == PosetKind::Subgroups && lat.subgroup_count() > 80 {
            continue;
        }
        let t = mobius(g, kind);
        let n = t.elements.len();
        let ok = (0..n).all(|i| {
            (0..n).all(|j| {
                i == j
                    || !t.leq(i, j)
                    || (0..n)
                        .filter(|&z| t.leq(i, z) && t.leq(z, j))
                        .map(|z| t.mu[i][z])
                        .sum::<i64>()
                        == 0
            })
        });
        out.push(outcome(&format!("mobius-{kind:?}"), spec, ok, ""));
    }
    if g.order() <= 24 {
        out.push(outcome("gluck-idempotents", spec, idempotents_ok(g), ""));
    }
    if recognize_pseudodihedral(g).is_some() {
        let q_ok = lat.normal_subgroups().iter().all(|ns| {
            let Ok((q, _)) = quotient_group(g, ns) else {
                return false;
            };
            let kind_ok = q.is_abelian() || recognize_pseudodihedral(&q).is_some();
            let embeds = lat
                .subgroups()
                .iter()
                .filter(|s| s.len() == q.order())
                .any(|s| is_isomorphic(&q, &subgroup_group(g, s).0).is_some());
            kind_ok && embeds
        });
        out.push(outcome("pd-quotients", spec, q_ok, ""));
        let p = phi(g).map(|p| p.unit);
        let fixed = p.as_ref().map(|p| {
            automorphisms(g)
                .iter()
                .all(|a| iso_transport(g, p, g, a).map(|t| &t == p).unwrap_or(false))
        });
        out.push(outcome("phi-automorphism-fixed", spec, fixed.unwrap_or(false), ""));
        record(
            out,
            "faithful-is-phi",
            spec,
            faithful_part(g, cap).map(|f| {
                let ok = f.dim() == 1 && p.as_ref().map(|p| f.contains(p)).unwrap_or(false);
                (ok, format!("dim {}", f.dim()))
            }),
        );
    }
    let dc_ok = lat.classes().iter().all(|a| {
        lat.classes().iter().all(|b| {
            let reps = double_coset_reps(g, &a.rep, &b.rep);
            let total: usize = reps
                .iter()
                .map(|&x| {
                    let meet = a.rep.intersection(&g.conjugate_set(x, &b.rep));
                    a.order * b.order / meet.len()
                })
                .sum();
            total == g.order()
        })
    });
    out.push(outcome("double-coset-partition", spec, dc_ok, ""));

    let units = match unit_group_with_cap(g, cap) {
        Ok(u) => u,
        Err(e) => {
            out.push(outcome("unit-group", spec, false, e.to_string()));
            return;
        }
    };
    let valid = units.basis().iter().all(|u| u.is_valid(g));
    out.push(outcome("units-in-ghost-image", spec, valid, ""));
    record(
        out,
        "standard-basis",
        spec,
        standard_basis(g).map(|s| (s == units, format!("{} vs {}", s.dim(), units.dim()))),
    );
    record(
        out,
        "faithful-decomposition",
        spec,
        faithful_decomposition(g, cap).map(|(a, b)| (a == b, format!("{a} vs {b}"))),
    );
    let trivial: ResidualSet = ["cyclic:1".to_string()].into_iter().collect();
    record(
        out,
        "expo-image-is-F_1",
        spec,
        subfunctor_value(&trivial, g, Method::Basis)
            .map(|f| (f == exponential_image(g), format!("dim {}", f.dim()))),
    );
    record(
        out,
        "gram-trivial-is-expo",
        spec,
        gram_rank(&FiniteGroup::trivial(), g).map(|r| {
            let e = exponential_image(g).dim();
            (r == e, format!("{r} vs {e}"))
        }),
    );
    if g.order() <= 20 {
        let symmetric = section_basis(g, &FiniteGroup::trivial())
            .map(|b| {
                let m = gram_matrix(g, &b);
                (0..m.len()).all(|i| (0..m.len()).all(|j| m[i].get(j) == m[j].get(i)))
            })
            .unwrap_or(false);
        out.push(outcome("gram-symmetric", spec, symmetric, ""));
    }
    if let Some(n) = spec.strip_prefix("dihedral:").and_then(|s| s.parse::<u64>().ok()) {
        record(
            out,
            "expo-dihedral",
            spec,
            expo_surjective(g, cap).map(|b| (b == expo_surjective_dihedral(n), format!("{b}"))),
        );
    }
    // residual checks on trivial or pseudodihedral groups up to order 24
    if g.order() <= 24 && (g.order() <= 2 || recognize_pseudodihedral(g).is_some()) {
        record(
            out,
            "residual-agreement",
            spec,
            is_residual(g, cap).map(|b| {
                let v = classify_residual(g);
                (b == v.residual, format!("{b} / {}", v.reason))
            }),
        );
    }
    if c_prime_core(g).is_some() && g.order() <= 24 {
        record(out, "subfunctor-routes", spec, routes_agree(g));
        record(out, "composition-count", spec, composition_count(g, cap));
    }
}

fn routes_agree(g: &FiniteGroup) -> Result<(bool, String)> {
    let rs = residual_subquotients(g)?;
    let mut ok = true;
    for m in rs.members() {
        let x = construct_group(m)?;
        let cl = closure(std::slice::from_ref(&x))?;
        let a = subfunctor_value(&cl, g, Method::Basis)?;
        let b = subfunctor_value(&cl, g, Method::Generate)?;
        ok &= a == b;
    }
    Ok((ok, format!("{} closed sets", rs.len())))
}

fn composition_count(g: &FiniteGroup, cap: usize) -> Result<(bool, String)> {
    let factors = composition_factors_over(g)?;
    let total = unit_group_with_cap(g, cap)?.dim();
    let mut sum = 0;
    for (spec, mult) in &factors {
        sum += mult * simple_dim(&construct_group(spec)?, g)?;
    }
    Ok((sum == total, format!("{sum} vs {total}")))
}

/// Subquotients of `G` up to isomorphism, smallest first.
pub fn subquotient_representatives(g: &FiniteGroup) -> Result<Vec<FiniteGroup>> {
    let mut reps: Vec<FiniteGroup> = Vec::new();
    for s in section_classes(g, false) {
        let q = SectionGroups::new(g, &s)?.quotient;
        if !reps.iter().any(|r| is_isomorphic(r, &q).is_some()) {
            reps.push(q);
        }
    }
    reps.sort_by_key(|r| r.order());
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::DEFAULT_CLASS_CAP;

    #[test]
    fn mackey_on_s3() {
        let g = construct_group("dihedral:3").unwrap();
        assert!(mackey_holds(&g, DEFAULT_CLASS_CAP).unwrap());
        assert!(commutation_holds(&g, DEFAULT_CLASS_CAP).unwrap());
    }

    #[test]
    fn idempotents_small() {
        assert!(idempotents_ok(&construct_group("dihedral:4").unwrap()));
        assert!(idempotents_ok(&construct_group("cyclic:1").unwrap()));
    }

    #[test]
    fn all_units_counts() {
        let g = construct_group("dihedral:5").unwrap();
        assert_eq!(all_units(&unit_group_with_cap(&g, 24).unwrap()).len(), 8);
    }

    #[test]
    fn subquotients_of_s3() {
        let g = construct_group("dihedral:3").unwrap();
        let orders: Vec<usize> = subquotient_representatives(&g).unwrap().iter().map(|r| r.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }
}
