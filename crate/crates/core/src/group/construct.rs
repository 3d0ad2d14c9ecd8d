use std::fmt;
use std::str::FromStr;

use super::FiniteGroup;
use crate::elemset::MAX_ORDER;
use crate::error::{Error, Result};

/// Parsed group description.
///
/// Grammar: `cyclic:<n>` | `dihedral:<n>` (order `2n`) | `abelian:<n1,...,nk>`
/// | `pd:<n1,...,nk>` | `<spec> x <spec>` (direct product, left associative,
/// whitespace around `x` required).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Abelian(Vec<usize>),
    /// `C2 ⋉ (C_{n1} × ... × C_{nk})` with the involution acting by inversion.
    Pseudodihedral(Vec<usize>),
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn order(&self) -> Option<usize> {
        match self {
            GroupSpec::Cyclic(n) => Some(*n),
            GroupSpec::Dihedral(n) => n.checked_mul(2),
            GroupSpec::Abelian(ns) => checked_product(ns),
            GroupSpec::Pseudodihedral(ns) => checked_product(ns)?.checked_mul(2),
            GroupSpec::Product(a, b) => a.order()?.checked_mul(b.order()?),
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        let order = self.order().unwrap_or(usize::MAX);
        if order > MAX_ORDER {
            return Err(Error::OrderCap {
                order,
                cap: MAX_ORDER,
            });
        }
        let label = self.to_string();
        let (n, table) = self.table();
        FiniteGroup::from_table(label, n, table)
    }

    fn table(&self) -> (usize, Vec<u16>) {
        match self {
            GroupSpec::Cyclic(n) => abelian_table(&[*n]),
            GroupSpec::Abelian(ns) => abelian_table(ns),
            GroupSpec::Dihedral(n) => semidirect_inversion_table(&[*n]),
            GroupSpec::Pseudodihedral(ns) => semidirect_inversion_table(ns),
            GroupSpec::Product(a, b) => {
                let (na, ta) = a.table();
                let (nb, tb) = b.table();
                let n = na * nb;
                let mut t = vec![0u16; n * n];
                for x in 0..n {
                    let (xa, xb) = (x % na, x / na);
                    for y in 0..n {
                        let (ya, yb) = (y % na, y / na);
                        let za = ta[xa * na + ya] as usize;
                        let zb = tb[xb * nb + yb] as usize;
                        t[x * n + y] = (za + na * zb) as u16;
                    }
                }
                (n, t)
            }
        }
    }
}

fn checked_product(ns: &[usize]) -> Option<usize> {
    ns.iter().try_fold(1usize, |acc, &n| acc.checked_mul(n))
}

fn digits(mut x: usize, ns: &[usize]) -> Vec<usize> {
    ns.iter()
        .map(|&n| {
            let d = x % n;
            x /= n;
            d
        })
        .collect()
}

fn undigits(ds: &[usize], ns: &[usize]) -> usize {
    ds.iter().zip(ns).rev().fold(0, |acc, (&d, &n)| acc * n + d)
}

fn abelian_table(ns: &[usize]) -> (usize, Vec<u16>) {
    let n: usize = ns.iter().product();
    let mut t = vec![0u16; n * n];
    for x in 0..n {
        let dx = digits(x, ns);
        for y in 0..n {
            let dy = digits(y, ns);
            let dz: Vec<usize> = dx
                .iter()
                .zip(&dy)
                .zip(ns)
                .map(|((a, b), m)| (a + b) % m)
                .collect();
            t[x * n + y] = undigits(&dz, ns) as u16;
        }
    }
    (n, t)
}

/// `C2 ⋉ A` with `A = ⊕ C_{ns[i]}` and the involution acting by inversion.
/// Element `v + |A|·s` stands for `x^s v`.
fn semidirect_inversion_table(ns: &[usize]) -> (usize, Vec<u16>) {
    let m: usize = ns.iter().product();
    let n = 2 * m;
    let mut t = vec![0u16; n * n];
    for x in 0..n {
        let (vx, sx) = (digits(x % m, ns), x / m);
        for y in 0..n {
            let (vy, sy) = (digits(y % m, ns), y / m);
            // x^sx vx x^sy vy = x^(sx+sy) (vx^(±1) + vy)
            let dz: Vec<usize> = vx
                .iter()
                .zip(&vy)
                .zip(ns)
                .map(|((a, b), k)| {
                    let a = if sy == 1 { (k - a) % k } else { *a };
                    (a + b) % k
                })
                .collect();
            t[x * n + y] = (undigits(&dz, ns) + m * ((sx + sy) % 2)) as u16;
        }
    }
    (n, t)
}

fn parse_err(spec: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        spec: spec.to_string(),
        reason: reason.into(),
    }
}

fn parse_list(spec: &str, body: &str) -> Result<Vec<usize>> {
    if body.is_empty() {
        return Err(parse_err(spec, "empty parameter list"));
    }
    body.split(',')
        .map(|t| {
            let n: usize = t
                .trim()
                .parse()
                .map_err(|_| parse_err(spec, format!("`{t}` is not a positive integer")))?;
            if n == 0 {
                return Err(parse_err(spec, "orders must be positive"));
            }
            Ok(n)
        })
        .collect()
}

fn parse_atom(atom: &str) -> Result<GroupSpec> {
    let (kind, body) = atom
        .split_once(':')
        .ok_or_else(|| parse_err(atom, "expected `<kind>:<parameters>`"))?;
    match kind {
        "cyclic" | "dihedral" => {
            let ns = parse_list(atom, body)?;
            if ns.len() != 1 {
                return Err(parse_err(atom, "expected a single integer"));
            }
            Ok(if kind == "cyclic" {
                GroupSpec::Cyclic(ns[0])
            } else {
                GroupSpec::Dihedral(ns[0])
            })
        }
        "abelian" => Ok(GroupSpec::Abelian(parse_list(atom, body)?)),
        "pd" => {
            let ns = parse_list(atom, body)?;
            let evens = ns.iter().filter(|&&n| n % 2 == 0).count();
            if evens > 1 {
                return Err(Error::InvalidPseudodihedral {
                    spec: atom.to_string(),
                    reason: "the 2-part of N is not cyclic".into(),
                });
            }
            let m = checked_product(&ns).unwrap_or(usize::MAX);
            if m <= 2 {
                return Err(Error::InvalidPseudodihedral {
                    spec: atom.to_string(),
                    reason: format!("|N| = {m} but pseudodihedral groups need |N| > 2"),
                });
            }
            Ok(GroupSpec::Pseudodihedral(ns))
        }
        other => Err(parse_err(atom, format!("unknown group kind `{other}`"))),
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(parse_err(s, "empty spec"));
        }
        if tokens.len().is_multiple_of(2) {
            return Err(parse_err(s, "dangling product operator"));
        }
        let mut acc = parse_atom(tokens[0])?;
        for pair in tokens[1..].chunks(2) {
            if pair[0] != "x" {
                return Err(parse_err(
                    s,
                    format!("expected ` x ` between factors, found `{}`", pair[0]),
                ));
            }
            acc = GroupSpec::Product(Box::new(acc), Box::new(parse_atom(pair[1])?));
        }
        Ok(acc)
    }
}

fn join(ns: &[usize]) -> String {
    ns.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Abelian(ns) => write!(f, "abelian:{}", join(ns)),
            GroupSpec::Pseudodihedral(ns) => write!(f, "pd:{}", join(ns)),
            GroupSpec::Product(a, b) => write!(f, "{a} x {b}"),
        }
    }
}

/// Parses a group spec and builds its Cayley table.
pub fn construct_group(spec: &str) -> Result<FiniteGroup> {
    spec.parse::<GroupSpec>()?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_orders() {
        assert_eq!(construct_group("cyclic:2").unwrap().order(), 2);
        assert_eq!(construct_group("dihedral:3").unwrap().order(), 6);
        assert_eq!(construct_group("abelian:2,2").unwrap().order(), 4);
        assert_eq!(construct_group("pd:4,3").unwrap().order(), 24);
        assert_eq!(construct_group("dihedral:5 x cyclic:3").unwrap().order(), 30);
    }

    #[test]
    fn tables_are_groups() {
        for s in [
            "cyclic:1",
            "cyclic:7",
            "dihedral:1",
            "dihedral:2",
            "dihedral:6",
            "abelian:2,4",
            "pd:1,3,3",
            "pd:2,3",
            "dihedral:3 x cyclic:2",
            "cyclic:2 x cyclic:2 x cyclic:3",
        ] {
            let g = construct_group(s).unwrap();
            assert!(g.check_axioms(), "{s}");
        }
    }

    #[test]
    fn pd_4_3_center_has_order_two() {
        let g = construct_group("pd:4,3").unwrap();
        assert!(!g.is_abelian());
        assert_eq!(g.center().len(), 2);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!(
            construct_group("pd:2,2"),
            Err(Error::InvalidPseudodihedral { .. })
        ));
        assert!(matches!(
            construct_group("pd:2"),
            Err(Error::InvalidPseudodihedral { .. })
        ));
        assert!(matches!(
            construct_group("pd:1"),
            Err(Error::InvalidPseudodihedral { .. })
        ));
        assert!(matches!(construct_group("dihedral:3xcyclic:2"), Err(Error::Parse { .. })));
        assert!(matches!(construct_group("dihedral:3 * cyclic:2"), Err(Error::Parse { .. })));
        assert!(matches!(construct_group("cyclic:0"), Err(Error::Parse { .. })));
        assert!(matches!(construct_group("klein:4"), Err(Error::Parse { .. })));
        assert!(matches!(construct_group("cyclic:2 x"), Err(Error::Parse { .. })));
        assert!(matches!(
            construct_group("cyclic:600"),
            Err(Error::OrderCap { order: 600, .. })
        ));
    }

    #[test]
    fn display_roundtrip() {
        for s in ["cyclic:4", "dihedral:5 x cyclic:3", "pd:1,3,3", "abelian:2,2 x dihedral:3"] {
            assert_eq!(s.parse::<GroupSpec>().unwrap().to_string(), s);
        }
    }
}
