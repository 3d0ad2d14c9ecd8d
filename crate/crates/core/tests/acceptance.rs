//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero when any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use bxu_core::burnside::{ghost_solve, BurnsideElement};
use bxu_core::functor::{
    classify_residual, composition_factors_over, divisor_count, expo_surjective,
    expo_surjective_dihedral, is_residual, s_formula, simple_dim, dihedral_simple, ClosedForm,
    closed_form_dims,
};
use bxu_core::group::{construct_group, FiniteGroup, GroupSpec};
use bxu_core::selfcheck::{
    commutation_holds, corpus, faithful_decomposition, idempotents_ok, mackey_holds,
    odd_index_inverse, subquotient_representatives,
};
use bxu_core::simple_form::gram_rank;
use bxu_core::units::{
    exponential_image, phi, standard_basis, unit_group_with_cap, DEFAULT_CLASS_CAP,
};
use bxu_core::ElementSet;

type Check = Result<String, String>;

fn dihedral(n: usize) -> FiniteGroup {
    GroupSpec::Dihedral(n).build().expect("dihedral group")
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn c1_unit_orders() -> Check {
    for n in 3..=15usize {
        let g = dihedral(n);
        let brute = unit_group_with_cap(&g, DEFAULT_CLASS_CAP).map_err(|e| e.to_string())?;
        let std = standard_basis(&g).map_err(|e| e.to_string())?;
        let d = divisor_count(n as u64) as usize;
        let expected = if n % 2 == 1 { d + 1 } else { d + 2 };
        ensure(brute.dim() == expected, format!("n={n}: brute {} vs {expected}", brute.dim()))?;
        ensure(std.dim() == expected, format!("n={n}: standard {} vs {expected}", std.dim()))?;
        ensure(std.is_subspace_of(&brute), format!("n={n}: standard basis not in B^x"))?;
    }
    Ok("3 <= n <= 15".into())
}

fn c2_phi_formulas() -> Check {
    for p in [3usize, 5, 7] {
        let g = dihedral(p);
        let lat = g.lattice();
        let b = ghost_solve(&g, &phi(&g).map_err(|e| e.to_string())?.unit.ghost())
            .ok_or("phi not in B(G)")?;
        let mut want = vec![0i64; lat.class_count()];
        want[0] = 1;
        want[lat.top()] = 1;
        let i = (0..lat.class_count()).find(|&c| lat.class(c).order == 2).ok_or("no I")?;
        want[i] = -2;
        ensure(b == BurnsideElement::from_i64(&want), format!("D{}: {:?}", 2 * p, b.coeffs))?;
    }
    let g = construct_group("pd:2,3").map_err(|e| e.to_string())?;
    let lat = g.lattice();
    let z = g.center();
    let b = ghost_solve(&g, &phi(&g).map_err(|e| e.to_string())?.unit.ghost()).ok_or("phi")?;
    let mut want = vec![0i64; lat.class_count()];
    want[0] = 1;
    want[lat.top()] = 1;
    let noncentral: Vec<usize> = (0..lat.class_count())
        .filter(|&c| lat.class(c).order == 2 && !lat.class(c).rep.is_subset(&z))
        .collect();
    ensure(noncentral.len() == 2, "pd:2,3 needs two noncentral involution classes")?;
    for c in noncentral {
        want[c] = -1;
    }
    ensure(b == BurnsideElement::from_i64(&want), format!("pd:2,3: {:?}", b.coeffs))?;
    Ok("D6, D10, D14, pd:2,3".into())
}

fn c3_residual_classification() -> Check {
    let cases: Vec<(String, bool)> = vec![
        ("dihedral:3".into(), false),
        ("dihedral:5".into(), true),
        ("dihedral:7".into(), false),
        ("dihedral:11".into(), false),
        ("dihedral:13".into(), true),
        ("dihedral:4".into(), false),
        ("pd:2,3".into(), false),
        ("pd:1,9".into(), false),
        ("pd:1,3,3".into(), true),
        ("pd:4,3".into(), true),
        ("dihedral:8".into(), true),
    ];
    for (spec, want) in &cases {
        let g = construct_group(spec).map_err(|e| e.to_string())?;
        let brute = is_residual(&g, DEFAULT_CLASS_CAP).map_err(|e| e.to_string())?;
        let v = classify_residual(&g);
        ensure(
            brute == *want && v.residual == *want,
            format!("{spec}: brute {brute}, classifier {} ({})", v.residual, v.reason),
        )?;
    }
    Ok(format!("{} groups", cases.len()))
}

fn c4_idempotents() -> Check {
    let mut n = 0;
    for spec in corpus() {
        let g = construct_group(&spec).map_err(|e| e.to_string())?;
        if g.order() > 24 {
            continue;
        }
        ensure(idempotents_ok(&g), spec.to_string())?;
        n += 1;
    }
    Ok(format!("{n} groups of order <= 24"))
}

fn c5_faithful_decomposition() -> Check {
    for spec in corpus() {
        let g = construct_group(&spec).map_err(|e| e.to_string())?;
        let (a, b) = faithful_decomposition(&g, DEFAULT_CLASS_CAP).map_err(|e| e.to_string())?;
        ensure(a == b, format!("{spec}: {a} vs {b}"))?;
    }
    Ok(format!("{} corpus groups", corpus().len()))
}

fn c6_exponential() -> Check {
    for n in 3..=15usize {
        let g = dihedral(n);
        let direct = expo_surjective(&g, DEFAULT_CLASS_CAP).map_err(|e| e.to_string())?;
        ensure(
            direct == expo_surjective_dihedral(n as u64),
            format!("n={n}: direct {direct}"),
        )?;
    }
    Ok("3 <= n <= 15".into())
}

fn c7_triple_agreement() -> Check {
    let trivial = FiniteGroup::trivial();
    for k in 1..=10usize {
        let g = dihedral(k);
        let gram = gram_rank(&trivial, &g).map_err(|e| e.to_string())?;
        let expo = exponential_image(&g).dim();
        let s = s_formula(k as u64) as usize;
        let sd = simple_dim(&trivial, &g).map_err(|e| e.to_string())?;
        ensure(
            gram == expo && expo == s && sd == s,
            format!("k={k}: gram {gram}, expo {expo}, s {s}, simple {sd}"),
        )?;
    }
    for (n, k) in [(5usize, 5usize), (5, 10), (5, 15), (5, 12), (8, 16)] {
        let gn = dihedral(n);
        let gk = dihedral(k);
        let sd = simple_dim(&gn, &gk).map_err(|e| e.to_string())?;
        let cf = closed_form_dims(ClosedForm::DihedralSimple { n: n as u64, k: k as u64 })
            .map_err(|e| e.to_string())? as usize;
        let gr = gram_rank(&gn, &gk).map_err(|e| e.to_string())?;
        ensure(
            sd == cf && cf == gr,
            format!("(n,k)=({n},{k}): simple {sd}, closed {cf}, gram {gr}"),
        )?;
        debug_assert_eq!(dihedral_simple(n as u64, k as u64).ok(), Some(cf as u64));
    }
    Ok("k <= 10 and 5 (n,k) pairs".into())
}

fn c8_odd_index() -> Check {
    let g = construct_group("dihedral:5 x cyclic:3").map_err(|e| e.to_string())?;
    let n: ElementSet = (0..10).collect();
    ensure(g.is_normal(&n), "D10 x 1 not normal")?;
    let (sub, _) = bxu_core::group::subgroup_group(&g, &n);
    let dg = unit_group_with_cap(&g, DEFAULT_CLASS_CAP).map_err(|e| e.to_string())?.dim();
    let dn = unit_group_with_cap(&sub, DEFAULT_CLASS_CAP).map_err(|e| e.to_string())?.dim();
    ensure(dg == 3 && dn == 3, format!("dims {dg}, {dn}"))?;
    let ok = odd_index_inverse(&g, &n, DEFAULT_CLASS_CAP).map_err(|e| e.to_string())?;
    ensure(ok, "Res and Ten are not mutually inverse")?;
    Ok("dim 3 = 3".into())
}

fn c9_mackey() -> Check {
    for spec in ["dihedral:6", "dihedral:4"] {
        let g = construct_group(spec).map_err(|e| e.to_string())?;
        ensure(mackey_holds(&g, DEFAULT_CLASS_CAP).map_err(|e| e.to_string())?, format!("{spec}: Mackey"))?;
        ensure(
            commutation_holds(&g, DEFAULT_CLASS_CAP).map_err(|e| e.to_string())?,
            format!("{spec}: Ten/Inf commutation"),
        )?;
    }
    Ok("D12, D8".into())
}

fn c10_composition() -> Check {
    let mut evaluated = 0;
    for spec in ["dihedral:6", "dihedral:10", "dihedral:8"] {
        let g = construct_group(spec).map_err(|e| e.to_string())?;
        let factors = composition_factors_over(&g).map_err(|e| e.to_string())?;
        let groups: Vec<FiniteGroup> = factors
            .iter()
            .map(|(s, _)| construct_group(s))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        for h in subquotient_representatives(&g).map_err(|e| e.to_string())? {
            let mut sum = 0;
            for (f, (_, mult)) in groups.iter().zip(&factors) {
                sum += mult * simple_dim(f, &h).map_err(|e| e.to_string())?;
            }
            let d = unit_group_with_cap(&h, DEFAULT_CLASS_CAP).map_err(|e| e.to_string())?.dim();
            ensure(sum == d, format!("{spec} at order {}: {sum} vs {d}", h.order()))?;
            evaluated += 1;
        }
    }
    Ok(format!("{evaluated} evaluations"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("1 unit-group orders of D_2n", c1_unit_orders),
        ("2 Phi formulas", c2_phi_formulas),
        ("3 residual classification", c3_residual_classification),
        ("4 Gluck idempotents", c4_idempotents),
        ("5 faithful-part decomposition", c5_faithful_decomposition),
        ("6 exponential surjectivity", c6_exponential),
        ("7 simple-dimension agreement", c7_triple_agreement),
        ("8 odd-index isomorphism", c8_odd_index),
        ("9 Mackey and commutation", c9_mackey),
        ("10 composition-factor accounting", c10_composition),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let t = Instant::now();
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(d) => println!("PASS criterion {name}: {d} ({secs:.2}s)"),
            Err(d) => {
                failed += 1;
                println!("FAIL criterion {name}: {d} ({secs:.2}s)");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
