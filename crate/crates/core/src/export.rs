//! JSON views of tables, units and subspaces. Object keys come out sorted.

use serde_json::{json, Value};

use crate::burnside::{MarkMatrix, RationalIdempotent};
use crate::f2::F2Vec;
use crate::group::FiniteGroup;
use crate::units::{Unit, UnitSubspace};

pub fn unit_json(g: &FiniteGroup, u: &Unit) -> Value {
    json!({
        "classes": g.lattice().labels(),
        "bits": u.bits.to_bit_string(),
    })
}

pub fn subspace_json(g: &FiniteGroup, s: &UnitSubspace) -> Value {
    json!({
        "classes": g.lattice().labels(),
        "dim": s.dim(),
        "basis": s.basis().iter().map(|u| u.bits.to_bit_string()).collect::<Vec<_>>(),
    })
}

pub fn marks_json(g: &FiniteGroup, m: &MarkMatrix) -> Value {
    json!({
        "classes": g.lattice().labels(),
        "marks": m.m,
    })
}

pub fn idempotent_json(g: &FiniteGroup, e: &RationalIdempotent) -> Value {
    json!({
        "class": g.lattice().class(e.class).label,
        "coeffs": e.coeffs.iter().map(|c| format!("{}/{}", c.numer(), c.denom())).collect::<Vec<_>>(),
    })
}

pub fn gram_json(labels: &[String], rows: &[F2Vec]) -> Value {
    json!({
        "sections": labels,
        "rows": rows.iter().map(|r| r.to_bit_string()).collect::<Vec<_>>(),
    })
}
