//! Residual groups, subfunctors of `B^×` indexed by closed sets of residual
//! groups, simple-functor dimensions and the exponential map.

mod closed_form;
mod residual;
mod subfunctor;

pub use closed_form::{
    closed_form_dims, dihedral_is_residual, dihedral_simple, divisor_count, s_formula, totient,
    ClosedForm,
};
pub use residual::{
    boundary_subspace, canonical_spec, classify_residual, closure, is_residual,
    residual_subquotients, ClassifierVerdict, ResidualReason, ResidualSet,
};
pub use subfunctor::{
    composition_factors_over, dihedral_scan, expo_surjective, expo_surjective_dihedral,
    simple_dim, subfunctor_value, Method, ScanRow,
};
