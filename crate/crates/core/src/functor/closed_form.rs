use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn totient(n: u64) -> u64 {
    let mut n0 = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= n0 {
        if n0.is_multiple_of(p) {
            while n0.is_multiple_of(p) {
                n0 /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n0 > 1 {
        out -= out / n0;
    }
    out
}

pub fn divisor_count(n: u64) -> u64 {
    (1..=n).filter(|d| n.is_multiple_of(*d)).count() as u64
}

fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn valuation(mut n: u64, p: u64) -> u32 {
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

/// Dimension of `S_{1,F2}(D_{2k})`: `m + 2` for odd `k`, `m + 4` for even
/// `k`, with `m` the number of divisors `d` of `k` with `φ(d) ≡ 2 mod 4`.
pub fn s_formula(k: u64) -> u64 {
    let m = (1..=k)
        .filter(|d| k.is_multiple_of(*d) && totient(*d) % 4 == 2)
        .count() as u64;
    if k % 2 == 1 {
        m + 2
    } else {
        m + 4
    }
}

/// Whether `D_{2n}` is residual, decided from `n` alone.
pub fn dihedral_is_residual(n: u64) -> bool {
    if n < 3 || n == 4 {
        return false;
    }
    let f = factor(n);
    if f.len() == 1 && f[0].1 == 1 {
        return n % 4 == 1;
    }
    if valuation(n, 2) == 1 {
        return false;
    }
    f.iter().all(|&(p, e)| p == 2 || e == 1)
}

/// Dimension of `S_{D_{2n},F2}(D_{2k})` for residual `D_{2n}`.
///
/// Zero unless `n | k`. Otherwise `m` is the product, over the odd primes
/// `p | n`, of the exponent of `p` in `k`; the value is `2m` when `n` is odd
/// and `k` even, and `m` otherwise.
pub fn dihedral_simple(n: u64, k: u64) -> Result<u64> {
    if !dihedral_is_residual(n) {
        return Err(Error::NotResidual(format!("dihedral:{n}")));
    }
    if !k.is_multiple_of(n) {
        return Ok(0);
    }
    let m: u64 = factor(n)
        .iter()
        .filter(|(p, _)| *p != 2)
        .map(|&(p, _)| valuation(k, p) as u64)
        .product();
    let n0 = valuation(n, 2);
    let m0 = valuation(k, 2);
    Ok(if n0 == 0 && m0 != 0 { 2 * m } else { m })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClosedForm {
    SFormula { k: u64 },
    DihedralSimple { n: u64, k: u64 },
}

pub fn closed_form_dims(kind: ClosedForm) -> Result<u64> {
    match kind {
        ClosedForm::SFormula { k } => {
            if k == 0 {
                return Err(Error::InvalidArgument("s(k) needs k >= 1".into()));
            }
            Ok(s_formula(k))
        }
        ClosedForm::DihedralSimple { n, k } => dihedral_simple(n, k),
    }
}
