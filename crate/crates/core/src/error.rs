use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse group spec `{spec}`: {reason}")]
    Parse { spec: String, reason: String },

    #[error("invalid pseudodihedral spec `{spec}`: {reason}")]
    InvalidPseudodihedral { spec: String, reason: String },

    #[error("group of order {order} exceeds the order cap {cap}")]
    OrderCap { order: usize, cap: usize },

    #[error(
        "group has {classes} subgroup classes, above the enumeration cap {cap}; \
         use the standard basis instead or raise the cap"
    )]
    EnumerationCap { classes: usize, cap: usize },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("group is not abelian")]
    NotAbelian,

    #[error("map is not a group isomorphism")]
    NotIsomorphism,

    #[error("{0} is not trivial, C2 or pseudodihedral")]
    NoPhi(String),

    #[error("{0} does not lie in C' (no odd-index normal subgroup with an abelian subgroup of index at most 2)")]
    NotInCPrime(String),

    #[error("{0} is not residual")]
    NotResidual(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("integer overflow during exact arithmetic")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
