//! Explicit computations on A²/Γ for Γ cyclic of order r+1 (type A_r).

pub mod action;
pub mod bridge;
pub mod corpus;
pub mod ideal;

pub use action::GammaActionA;
pub use bridge::{hilbert_chow, hilbert_chow_full_module, hilbert_chow_matrices, rep_from_ideal, HilbertChowPoint};
pub use corpus::{balanced_partitions, corpus, monomial_ideal, orbit_ideal, orbit_image, orbit_union, CorpusEntry, CorpusKind};
pub use ideal::{colength, isotypic_dims, quot_dims_check, tau, InvariantIdeal, IsotypicDims, PolyIdeal};

use mckay_roots::DynkinType;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KleinianError {
    #[error("explicit ideal computations need type A, got {0}")]
    NotTypeA(DynkinType),
    #[error("ideal is not invariant under the group")]
    NotInvariant,
    #[error("quotient is infinite dimensional")]
    InfiniteColength,
    #[error("isotypic dimensions {got:?} are not n*delta{}", expected.map(|n| format!(" for n={n}")).unwrap_or_default())]
    NotMultipleOfDelta { got: Vec<usize>, expected: Option<usize> },
    #[error("invariant ideal has colength {got}, expected {expected}")]
    WrongColength { expected: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(#[from] mckay_poly::ParseError),
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("{0}")]
    Eigen(#[from] mckay_reps::RepError),
    #[error("orbit multiplicities are not divisible by the group order")]
    UnevenMultiplicity,
    #[error("point must have both coordinates nonzero to span a free orbit")]
    NotFree,
}
