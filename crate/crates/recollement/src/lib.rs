//! A₀-modules, their comparison with framed representations, and j_!.

pub mod module;
pub mod shriek;

pub use module::{a0_module_from_invariant_ideal, restrict_to_corner, A0Module, KrylovForm};
pub use shriek::{shriek, shriek_with_defaults, verify_shriek_lemma, ShriekReport, ShriekResult};

use mckay_roots::DynkinType;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RecollementError {
    #[error("only type A is supported, got {0}")]
    UnsupportedType(DynkinType),
    #[error("matrices B{0} and B{1} do not commute")]
    NonCommuting(usize, usize),
    #[error("relation uw - v^(r+1) fails on the module")]
    RelationFails,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invariant ideal has colength {got}, expected {expected}")]
    WrongColength { expected: usize, got: usize },
    #[error("invariant ideal has infinite colength")]
    InfiniteColength,
    #[error("module is not generated by its framing vector")]
    NotGenerated,
    #[error("result is not certified (stopped at degree {0})")]
    Uncertified(usize),
    #[error(transparent)]
    Kleinian(#[from] mckay_kleinian::KleinianError),
    #[error(transparent)]
    Rep(#[from] mckay_reps::RepError),
}
