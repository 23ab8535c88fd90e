use thiserror::Error;

use crate::rootsys::{Root, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidCartan(String),

    #[error("expected a vector of length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("{0:?} is not a root of this root system")]
    NotARoot(Root),

    #[error("{0:?} is not an isotropy root of this parabolic")]
    NotInPsi(Root),

    #[error("group too large: |W| = {order} exceeds the cap of {cap}")]
    GroupTooLarge { order: u128, cap: u128 },

    #[error("quotient too large: |W/W_theta| = {size} exceeds the cap of {cap}")]
    QuotientTooLarge { size: u128, cap: u128 },

    #[error("weight {weight} is not ample: pairing with root {root:?} is {pairing}")]
    NotAmple { weight: Weight, root: Root, pairing: i64 },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("rho + lambda = {0} is singular")]
    Singular(Weight),

    #[error("localization point is not regular: {0}")]
    NonRegularPoint(String),

    #[error("cross-check failed: {0}")]
    CrossCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
