//! Workloads shared by the criterion benches in `benches/`.

use bxu_core::group::{construct_group, FiniteGroup};

/// Groups timed by the unit benches, smallest first.
pub const UNIT_GROUPS: &[&str] = &["dihedral:6", "dihedral:12", "pd:1,3,3", "dihedral:24"];

/// (G, H) pairs timed by the Gram rank bench.
pub const GRAM_PAIRS: &[(&str, &str)] = &[
    ("dihedral:5", "dihedral:15"),
    ("cyclic:1", "dihedral:12"),
    ("dihedral:8", "dihedral:16"),
];

/// A freshly built group, so that per-group caches start empty.
pub fn fresh(spec: &str) -> FiniteGroup {
    construct_group(spec).expect("bench specs are valid")
}
