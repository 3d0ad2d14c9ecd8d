//! Command-line frontend for `bxu-core`.
//!
//! Exit codes: 0 success, 1 parse or domain error, 2 size cap exceeded,
//! 3 disagreement between independent routes or a failed self-check.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bxu_core::burnside::{ghost_solve, table_of_marks};
use bxu_core::export::{marks_json, subspace_json};
use bxu_core::functor::{
    classify_residual, closed_form_dims, dihedral_scan, expo_surjective_dihedral, is_residual,
    residual_subquotients, simple_dim, ClosedForm,
};
use bxu_core::group::{
    abelian_invariants, c_prime_core, construct_group, recognize_pseudodihedral, subgroup_group,
    GroupSpec,
};
use bxu_core::selfcheck::run_selfcheck;
use bxu_core::simple_form::gram_rank;
use bxu_core::units::{
    exponential_image, phi, standard_basis, standard_basis_elements, unit_group_with_cap,
    DEFAULT_CLASS_CAP,
};
use bxu_core::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Subfunctor,
    ClosedForm,
    Gram,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum UnitMethod {
    Brute,
    Standard,
    Both,
}

#[derive(Debug, Parser)]
#[command(name = "bxu", version, about = "Unit groups of Burnside rings of small finite groups")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,

    /// Largest number of subgroup classes for brute-force unit enumeration.
    #[arg(long, env = "BXU_CAP", default_value_t = DEFAULT_CLASS_CAP, global = true)]
    pub cap: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, subgroup classes and pseudodihedral structure.
    Describe { spec: String },
    /// Table of marks.
    Tom { spec: String },
    /// The unit group of the Burnside ring.
    Units {
        spec: String,
        #[arg(long, value_enum, default_value = "brute")]
        method: UnitMethod,
    },
    /// The faithful unit Φ.
    Phi { spec: String },
    /// Standard basis of inflated Φ elements.
    Basis { spec: String },
    /// Residuality, by brute force and by classification.
    Residual { spec: String },
    /// Dimension of the simple functor S_{G,F2} evaluated at H.
    SimpleDim {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[arg(long, value_enum, default_value = "subfunctor")]
        route: Route,
    },
    /// Image of the exponential map.
    Expo { spec: String },
    /// Dihedral table over a range `nmin..nmax` (inclusive).
    Scan {
        #[arg(long, value_name = "NMIN..NMAX")]
        dihedral: String,
    },
    /// Run the invariant suite on the built-in corpus.
    Selfcheck,
}

struct Report {
    json: Value,
    text: String,
    csv: Vec<Vec<String>>,
    code: i32,
}

impl Report {
    fn new(json: Value, text: String, csv: Vec<Vec<String>>) -> Self {
        Report {
            json,
            text,
            csv,
            code: 0,
        }
    }

    fn pairs(json: Value, pairs: Vec<(&str, String)>) -> Self {
        let text = pairs
            .iter()
            .map(|(k, v)| format!("{k}: {v}\n"))
            .collect::<String>();
        let mut csv = vec![vec!["key".to_string(), "value".to_string()]];
        csv.extend(pairs.into_iter().map(|(k, v)| vec![k.to_string(), v]));
        Report::new(json, text, csv)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::OrderCap { .. } | Error::EnumerationCap { .. } => 2,
        _ => 1,
    }
}

/// Runs the CLI on `argv` (including the program name), writing the report
/// to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(r) => {
            let written = match cli.format {
                Format::Text => write!(out, "{}", r.text),
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&r.json).expect("json values serialize")
                ),
                Format::Csv => write_csv(out, &r.csv),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return 1;
            }
            r.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn write_csv(out: &mut dyn Write, rows: &[Vec<String>]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()
}

fn dispatch(cli: &Cli) -> Result<Report, Error> {
    let cap = cli.cap;
    match &cli.command {
        Command::Describe { spec } => describe(spec),
        Command::Tom { spec } => tom(spec),
        Command::Units { spec, method } => units(spec, *method, cap),
        Command::Phi { spec } => phi_report(spec),
        Command::Basis { spec } => basis(spec),
        Command::Residual { spec } => residual(spec, cap),
        Command::SimpleDim { g, h, route } => simple(g, h, *route),
        Command::Expo { spec } => expo(spec, cap),
        Command::Scan { dihedral } => scan(dihedral, cap),
        Command::Selfcheck => selfcheck(cap),
    }
}

fn describe(spec: &str) -> Result<Report, Error> {
    let g = construct_group(spec)?;
    let lat = g.lattice();
    let pd = recognize_pseudodihedral(&g).map(|w| {
        let (n, _) = subgroup_group(&g, &w.n);
        abelian_invariants(&n).unwrap_or_default()
    });
    let classes: Vec<Value> = lat
        .classes()
        .iter()
        .map(|c| {
            json!({
                "label": c.label,
                "order": c.order,
                "size": c.members.len(),
                "normal": c.is_normal(),
            })
        })
        .collect();
    let mut text = format!(
        "group: {}\norder: {}\nsubgroups: {}\nclasses: {}\nabelian: {}\ncenter: {}\npseudodihedral: {}\nin C': {}\n",
        g.label(),
        g.order(),
        lat.subgroup_count(),
        lat.class_count(),
        g.is_abelian(),
        g.center().len(),
        match &pd {
            Some(inv) => format!("N = {inv:?}"),
            None => "no".into(),
        },
        c_prime_core(&g).is_some(),
    );
    text.push_str("class      order  size  normal\n");
    let mut csv = vec![vec!["label".into(), "order".into(), "size".into(), "normal".into()]];
    for c in lat.classes() {
        text.push_str(&format!(
            "{:<10} {:>5} {:>5}  {}\n",
            c.label,
            c.order,
            c.members.len(),
            c.is_normal()
        ));
        csv.push(vec![
            c.label.clone(),
            c.order.to_string(),
            c.members.len().to_string(),
            c.is_normal().to_string(),
        ]);
    }
    let json = json!({
        "group": g.label(),
        "order": g.order(),
        "subgroups": lat.subgroup_count(),
        "abelian": g.is_abelian(),
        "center_order": g.center().len(),
        "pseudodihedral_n": pd,
        "in_c_prime": c_prime_core(&g).is_some(),
        "classes": classes,
    });
    Ok(Report::new(json, text, csv))
}

fn tom(spec: &str) -> Result<Report, Error> {
    let g = construct_group(spec)?;
    let m = table_of_marks(&g);
    let labels = g.lattice().labels();
    let mut csv = vec![std::iter::once("H\\K".to_string())
        .chain(labels.iter().cloned())
        .collect::<Vec<_>>()];
    let width = labels.iter().map(|l| l.len()).max().unwrap_or(1).max(3);
    let mut text = format!("{:>width$}", "");
    for l in &labels {
        text.push_str(&format!(" {l:>width$}"));
    }
    text.push('\n');
    for (l, row) in labels.iter().zip(&m.m) {
        text.push_str(&format!("{l:>width$}"));
        for v in row {
            text.push_str(&format!(" {v:>width$}"));
        }
        text.push('\n');
        csv.push(
            std::iter::once(l.clone())
                .chain(row.iter().map(|v| v.to_string()))
                .collect(),
        );
    }
    Ok(Report::new(marks_json(&g, m), text, csv))
}

fn basis_rows(labels: &[String], rows: &[String]) -> (String, Vec<Vec<String>>) {
    let mut text = format!("classes: {}\n", labels.join(" "));
    let mut csv = vec![labels.to_vec()];
    for r in rows {
        text.push_str(&format!("  {r}\n"));
        csv.push(r.chars().map(|c| c.to_string()).collect());
    }
    (text, csv)
}

fn units(spec: &str, method: UnitMethod, cap: usize) -> Result<Report, Error> {
    let g = construct_group(spec)?;
    let labels = g.lattice().labels();
    let brute = matches!(method, UnitMethod::Brute | UnitMethod::Both)
        .then(|| unit_group_with_cap(&g, cap))
        .transpose()?;
    let std = matches!(method, UnitMethod::Standard | UnitMethod::Both)
        .then(|| standard_basis(&g))
        .transpose()?;
    let space = brute.as_ref().or(std.as_ref()).expect("one method runs");
    let rows: Vec<String> = space.basis().iter().map(|u| u.bits.to_bit_string()).collect();
    let (mut text, csv) = basis_rows(&labels, &rows);
    text = format!("group: {}\ndim: {}\n{text}", g.label(), space.dim());
    let mut json = subspace_json(&g, space);
    json["group"] = json!(g.label());
    let mut code = 0;
    if let (Some(a), Some(b)) = (&brute, &std) {
        let agree = a == b;
        json["agree"] = json!(agree);
        json["standard_dim"] = json!(b.dim());
        text.push_str(&format!("brute and standard agree: {agree}\n"));
        if !agree {
            code = 3;
        }
    }
    let mut r = Report::new(json, text, csv);
    r.code = code;
    Ok(r)
}

fn phi_report(spec: &str) -> Result<Report, Error> {
    let g = construct_group(spec)?;
    let p = phi(&g)?;
    let labels = g.lattice().labels();
    let coeffs: Vec<String> = ghost_solve(&g, &p.unit.ghost())
        .expect("phi lies in B(G)")
        .coeffs
        .iter()
        .map(|c| c.to_string())
        .collect();
    let kind = format!("{:?}", p.kind).to_lowercase();
    let bits = p.unit.bits.to_bit_string();
    let json = json!({
        "group": g.label(),
        "kind": kind,
        "classes": labels,
        "bits": bits,
        "coefficients": coeffs,
    });
    Ok(Report::pairs(
        json,
        vec![
            ("group", g.label().to_string()),
            ("kind", kind.clone()),
            ("classes", labels.join(" ")),
            ("bits", bits.clone()),
            ("coefficients", coeffs.join(" ")),
        ],
    ))
}

fn basis(spec: &str) -> Result<Report, Error> {
    let g = construct_group(spec)?;
    let labels = g.lattice().labels();
    let elems = standard_basis_elements(&g)?;
    let rows: Vec<String> = elems.iter().map(|u| u.bits.to_bit_string()).collect();
    let dim = standard_basis(&g)?.dim();
    let (text, csv) = basis_rows(&labels, &rows);
    let json = json!({
        "group": g.label(),
        "classes": labels,
        "elements": rows,
        "dim": dim,
    });
    Ok(Report::new(
        json,
        format!("group: {}\ndim: {dim}\n{text}", g.label()),
        csv,
    ))
}

fn residual(spec: &str, cap: usize) -> Result<Report, Error> {
    let g = construct_group(spec)?;
    let v = classify_residual(&g);
    let brute = is_residual(&g, cap)?;
    let subq = residual_subquotients(&g).ok().map(|s| s.members().to_vec());
    let agree = brute == v.residual;
    let json = json!({
        "group": g.label(),
        "brute": brute,
        "classifier": v.residual,
        "reason": v.reason.to_string(),
        "agree": agree,
        "residual_subquotients": subq,
    });
    let mut r = Report::pairs(
        json,
        vec![
            ("group", g.label().to_string()),
            ("brute", brute.to_string()),
            ("classifier", v.residual.to_string()),
            ("reason", v.reason.to_string()),
            ("agree", agree.to_string()),
            (
                "residual_subquotients",
                subq.map(|s| s.join(" ")).unwrap_or_else(|| "n/a".into()),
            ),
        ],
    );
    r.code = if agree { 0 } else { 3 };
    Ok(r)
}

fn closed_form_for(g: &str, h: &str) -> Result<u64, Error> {
    let gs: GroupSpec = g.parse()?;
    let hs: GroupSpec = h.parse()?;
    match (gs, hs) {
        (GroupSpec::Cyclic(1), GroupSpec::Dihedral(k)) => {
            closed_form_dims(ClosedForm::SFormula { k: k as u64 })
        }
        (GroupSpec::Dihedral(n), GroupSpec::Dihedral(k)) => {
            closed_form_dims(ClosedForm::DihedralSimple {
                n: n as u64,
                k: k as u64,
            })
        }
        _ => Err(Error::InvalidArgument(
            "closed forms cover G trivial or dihedral and H dihedral".into(),
        )),
    }
}

fn simple(g_spec: &str, h_spec: &str, route: Route) -> Result<Report, Error> {
    let g = construct_group(g_spec)?;
    let h = construct_group(h_spec)?;
    let mut results: Vec<(&str, u64)> = Vec::new();
    if matches!(route, Route::Subfunctor | Route::All) {
        results.push(("subfunctor", simple_dim(&g, &h)? as u64));
    }
    if matches!(route, Route::ClosedForm | Route::All) {
        match closed_form_for(g_spec, h_spec) {
            Ok(v) => results.push(("closed-form", v)),
            Err(e) if route == Route::ClosedForm => return Err(e),
            Err(_) => {}
        }
    }
    if matches!(route, Route::Gram | Route::All) {
        results.push(("gram", gram_rank(&g, &h)? as u64));
    }
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    let mut routes = serde_json::Map::new();
    for (k, v) in &results {
        routes.insert(k.to_string(), json!(v));
    }
    let json = json!({
        "g": g.label(),
        "h": h.label(),
        "routes": routes,
        "dim": results[0].1,
        "agree": agree,
    });
    let mut pairs: Vec<(&str, String)> = vec![("g", g.label().into()), ("h", h.label().into())];
    pairs.extend(results.iter().map(|(k, v)| (*k, v.to_string())));
    pairs.push(("agree", agree.to_string()));
    let mut r = Report::pairs(json, pairs);
    r.code = if agree { 0 } else { 3 };
    Ok(r)
}

fn expo(spec: &str, cap: usize) -> Result<Report, Error> {
    let g = construct_group(spec)?;
    if c_prime_core(&g).is_none() {
        return Err(Error::NotInCPrime(g.label().to_string()));
    }
    let image = exponential_image(&g).dim();
    let total = match unit_group_with_cap(&g, cap) {
        Ok(u) => u.dim(),
        Err(Error::EnumerationCap { .. }) => standard_basis(&g)?.dim(),
        Err(e) => return Err(e),
    };
    let surjective = image == total;
    let predicted = match spec.parse::<GroupSpec>()? {
        GroupSpec::Dihedral(n) if n >= 3 => Some(expo_surjective_dihedral(n as u64)),
        _ => None,
    };
    let agree = predicted.is_none_or(|p| p == surjective);
    let json = json!({
        "group": g.label(),
        "image_dim": image,
        "units_dim": total,
        "surjective": surjective,
        "totient_prediction": predicted,
        "agree": agree,
    });
    let mut pairs = vec![
        ("group", g.label().to_string()),
        ("image dim", image.to_string()),
        ("units dim", total.to_string()),
        ("surjective", surjective.to_string()),
    ];
    if let Some(p) = predicted {
        pairs.push(("totient prediction", p.to_string()));
    }
    let mut r = Report::pairs(json, pairs);
    r.code = if agree { 0 } else { 3 };
    Ok(r)
}

fn parse_range(s: &str) -> Result<(u64, u64), Error> {
    let bad = || Error::InvalidArgument(format!("expected NMIN..NMAX, got `{s}`"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().parse().map_err(|_| bad())?;
    if a == 0 || a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn scan(range: &str, cap: usize) -> Result<Report, Error> {
    let (a, b) = parse_range(range)?;
    let rows = dihedral_scan(a, b, cap)?;
    let header = ["n", "dim_bx", "s_n", "expo_surjective", "residual"];
    let mut csv = vec![header.iter().map(|s| s.to_string()).collect::<Vec<_>>()];
    let mut text = format!("{:>4} {:>6} {:>4} {:>15} {:>8}\n", "n", "dim_bx", "s_n", "expo_surjective", "residual");
    for r in &rows {
        csv.push(vec![
            r.n.to_string(),
            r.dim_bx.to_string(),
            r.s_n.to_string(),
            r.expo_surjective.to_string(),
            r.residual.to_string(),
        ]);
        text.push_str(&format!(
            "{:>4} {:>6} {:>4} {:>15} {:>8}\n",
            r.n, r.dim_bx, r.s_n, r.expo_surjective, r.residual
        ));
    }
    let json = serde_json::to_value(&rows).expect("rows serialize");
    Ok(Report::new(json, text, csv))
}

fn selfcheck(cap: usize) -> Result<Report, Error> {
    let outcomes = run_selfcheck(cap);
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let mut text = String::new();
    let mut csv = vec![vec!["check".into(), "group".into(), "passed".into(), "detail".into()]];
    for o in &outcomes {
        text.push_str(&format!(
            "{} {:<26} {:<24} {}\n",
            if o.passed { "ok  " } else { "FAIL" },
            o.name,
            o.group,
            o.detail
        ));
        csv.push(vec![o.name.clone(), o.group.clone(), o.passed.to_string(), o.detail.clone()]);
    }
    text.push_str(&format!("{} checks, {failed} failed\n", outcomes.len()));
    let json = json!({
        "checks": outcomes,
        "failed": failed,
    });
    let mut r = Report::new(json, text, csv);
    r.code = if failed == 0 { 0 } else { 3 };
    Ok(r)
}
