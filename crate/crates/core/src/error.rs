use thiserror::Error;

use crate::Elem;

/// Errors raised while building or validating algebraic structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("carrier of size {size} exceeds the configured cap of {cap} elements")]
    SizeLimit { size: u128, cap: usize },

    #[error("table has length {got}, expected {expected}")]
    TableLength { expected: usize, got: usize },

    #[error("element index {index} out of range for a carrier of size {size}")]
    ElementOutOfRange { index: usize, size: usize },

    #[error("unknown element label {0:?}")]
    UnknownLabel(String),

    #[error("map is not a ring endomorphism: {0}")]
    NotEndomorphism(MapViolation),

    #[error("map is not a sigma-derivation: {0}")]
    NotDerivation(MapViolation),

    #[error("ring axiom violated: {0}")]
    RingAxiom(String),

    #[error("module axiom violated: {0}")]
    ModuleAxiom(String),

    #[error("set is not an ideal: {0}")]
    NotIdeal(String),

    #[error("structures live over different rings")]
    RingMismatch,

    #[error("construction mismatch: {0}")]
    ConstructionMismatch(String),

    #[error("internal soundness failure: {0}")]
    Internal(String),
}

/// Which defining identity of σ or δ failed, with the offending pair.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapViolation {
    #[error("not additive at ({a}, {b})")]
    Additive { a: Elem, b: Elem },
    #[error("not multiplicative at ({a}, {b})")]
    Multiplicative { a: Elem, b: Elem },
    #[error("does not fix the identity")]
    Unital,
    #[error("Leibniz rule fails at ({a}, {b})")]
    Leibniz { a: Elem, b: Elem },
    #[error("image {image} out of range")]
    OutOfRange { image: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
