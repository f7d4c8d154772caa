//! Framed representations of the doubled McKay quiver, their moment maps,
//! stability tests and eigenvalue invariants.

pub mod eigen;
pub mod moment;
pub mod rep;
pub mod stability;

pub use eigen::paired_eigenvalues;
pub use moment::{check_preprojective, moment_map, symplectic_pairing, trace_identity_check, MomentValue};
pub use rep::{framed_quiver, random_gauge, random_invertible, AnyRep, DimVector, FramedRep, SubDimVector};
pub use stability::{
    bruteforce_destabilizer, for_each_subrep, is_semistable_bruteforce, is_stable_cplus_batch, is_semistable_theta_i, is_stable_cplus, lemma_j_zero_check,
    spin_from_framing, spin_rounds, theta_pairing, BRUTEFORCE_MAX_DIM,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("dimension vector has {got} entries, expected {expected}")]
    DimLength { expected: usize, got: usize },
    #[error("arrow {arrow}: matrix is {got:?}, expected {expected:?}")]
    Shape { arrow: usize, expected: (usize, usize), got: (usize, usize) },
    #[error("expected {expected} arrow matrices, got {got}")]
    ArrowCount { expected: usize, got: usize },
    #[error("representations live on different quivers or dimension vectors")]
    Mismatch,
    #[error("sign function does not fit the quiver")]
    BadSign,
    #[error("framing dimension must be 1, got {0}")]
    FramingDim(usize),
    #[error("representation is not a point of the zero fibre of the moment map")]
    NotPreprojective,
    #[error("representation is not stable for the positive cone")]
    NotStable,
    #[error("index set must be non-empty")]
    EmptyIndexSet,
    #[error("vertex index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("exhaustive search limited to total dimension {limit} over F2 or F3 (got dimension {total}, field {field})")]
    BruteForceGuard { total: usize, limit: usize, field: String },
    #[error("stability parameter has {got} coordinates, expected {expected}")]
    ThetaDim { expected: usize, got: usize },
    #[error("matrices {0} and {1} do not commute")]
    NonCommuting(usize, usize),
    #[error("matrix {0} is not square or sizes differ")]
    NotSquare(usize),
    #[error("characteristic polynomial of matrix {0} does not split over Q; extend field")]
    NotSplit(usize),
    #[error("field mismatch: data is over {found}, expected {expected}")]
    FieldMismatch { expected: String, found: String },
    #[error("invalid representation data: {0}")]
    Invalid(String),
}
