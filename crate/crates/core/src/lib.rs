//! Unit groups of Burnside rings of small finite groups.
//!
//! Groups are explicit Cayley tables ([`FiniteGroup`]). On top of the
//! subgroup lattice the crate builds the table of marks, the unit group
//! `B^×(G)` as an F2 space over subgroup classes, the elementary biset
//! operations on units, the standard basis made of inflated `Φ` elements,
//! residual groups, subfunctor values and the dimensions of the simple
//! functors `S_{G,F2}` evaluated at a group.

pub mod burnside;
pub mod elemset;
pub mod error;
pub mod export;
pub mod f2;
pub mod functor;
pub mod group;
pub mod selfcheck;
pub mod simple_form;
pub mod units;

pub use burnside::{
    fn_idempotent, ghost_solve, gluck_idempotent, marks_of, mobius, table_of_marks,
    BurnsideElement, FNIdempotent, GhostVector, MarkMatrix, MobiusTable, PosetKind,
    RationalIdempotent,
};
pub use elemset::{ElementSet, MAX_ORDER};
pub use error::{Error, Result};
pub use f2::F2Vec;
pub use functor::{
    boundary_subspace, classify_residual, closed_form_dims, closure, composition_factors_over,
    expo_surjective, expo_surjective_dihedral, is_residual, residual_subquotients, simple_dim,
    subfunctor_value, ClassifierVerdict, ClosedForm, Method, ResidualReason, ResidualSet,
};
pub use group::{
    abelian_invariants, construct_group, double_coset_reps, is_isomorphic, quotient_group,
    recognize_pseudodihedral, section_classes, sections, subgroup_group, FiniteGroup, GroupMap,
    GroupSpec, PseudodihedralWitness, Section, SectionGroups, SubgroupClass, SubgroupLattice,
};
pub use simple_form::{gram_matrix, gram_rank, linked, section_basis};
pub use units::{
    deflate, exponential, exponential_image, faithful_part, fn_project, inflate, iso_transport,
    phi, restrict, standard_basis, tensor_induce, unit_group, unit_group_with_cap, PhiElement,
    PhiKind, Unit, UnitSubspace, DEFAULT_CLASS_CAP,
};
