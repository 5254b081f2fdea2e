use num_bigint::BigUint;
use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Domain errors. Anything that is an implementation bug (a broken internal
/// identity, an inexact division that must be exact) panics instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be a positive integer, got 0")]
    ZeroArgument,

    #[error("unitary Cayley graphs are defined for moduli n >= 2, got {0}")]
    ModulusTooSmall(u64),

    #[error("residue {residue} is out of range for modulus {modulus}")]
    ResidueOutOfRange { residue: u64, modulus: u64 },

    #[error("multipartite factor needs part_size >= 1 and parts >= 1, got {part_size}x{parts}")]
    EmptyFactor { part_size: u64, parts: u64 },

    #[error("a product graph needs at least one factor")]
    EmptySpec,

    #[error("vertex has {got} coordinates but the product has {expected} factors")]
    ArityMismatch { expected: usize, got: usize },

    #[error("coordinate {value} at position {axis} is out of range for a factor with {size} vertices")]
    CoordinateOutOfRange { axis: usize, value: u64, size: u64 },

    #[error("graph has {vertices} vertices, above the configured cap of {cap}")]
    GraphTooLarge { vertices: BigUint, cap: u64 },

    #[error("clique order m = 0 is rejected here; clique_count_including_empty opts into the empty-clique convention")]
    ZeroCliqueOrder,

    #[error("vertices {u} and {v} are not adjacent, so the input is not a clique")]
    NotAClique { u: String, v: String },

    #[error("cannot parse product spec {input:?}: {reason}")]
    SpecParse { input: String, reason: String },

    #[error("invalid value for {name}: {reason}")]
    BadConfig { name: String, reason: String },
}
