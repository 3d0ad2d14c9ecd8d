//! Values frozen from an independent brute-force enumeration of dihedral
//! groups (pairs of generators, literal coset counting, exhaustive sign
//! vectors).

use bxu_core::burnside::table_of_marks;
use bxu_core::group::GroupSpec;
use bxu_core::units::{exponential_image, unit_group};

/// `(n, subgroups, classes, dim B^×, dim Im ε)` for `D_{2n}`.
const DIHEDRAL: [(usize, usize, usize, usize, usize); 15] = [
    (1, 2, 2, 2, 2),
    (2, 5, 5, 4, 4),
    (3, 6, 4, 3, 3),
    (4, 10, 8, 5, 5),
    (5, 8, 4, 3, 2),
    (6, 16, 10, 6, 6),
    (7, 10, 4, 3, 3),
    (8, 19, 11, 6, 5),
    (9, 16, 6, 4, 4),
    (10, 22, 10, 6, 4),
    (11, 14, 4, 3, 3),
    (12, 34, 16, 8, 7),
    (13, 16, 4, 3, 2),
    (14, 28, 10, 6, 6),
    (15, 28, 8, 5, 3),
];

#[test]
fn dihedral_table_matches_oracle() {
    for (n, subs, classes, units, expo) in DIHEDRAL {
        let g = GroupSpec::Dihedral(n).build().unwrap();
        let lat = g.lattice();
        assert_eq!(lat.subgroup_count(), subs, "subgroups of D{}", 2 * n);
        assert_eq!(lat.class_count(), classes, "classes of D{}", 2 * n);
        assert_eq!(unit_group(&g).unwrap().dim(), units, "B^x(D{})", 2 * n);
        assert_eq!(exponential_image(&g).dim(), expo, "Im e(D{})", 2 * n);
    }
}

#[test]
fn s3_first_mark_row() {
    let g = GroupSpec::Dihedral(3).build().unwrap();
    assert_eq!(table_of_marks(&g).m[0], vec![6, 3, 2, 1]);
}
