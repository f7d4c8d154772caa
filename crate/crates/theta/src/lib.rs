//! The space Θ of stability parameters, written in coordinates
//! (θ₀,…,θ_r) = (θ(ρ₀),…,θ(ρ_r)); the ∞-component is always derived.

pub mod arrangement;
pub mod chambers;
pub mod param;
pub mod weyl;

pub use arrangement::{arrangement, sign_vector, is_generic, Arrangement, Hyperplane, HyperplaneLabel, Sign};
pub use chambers::{classify_wall, count_chambers, ChamberCount, WallKind, CHAMBER_MAX_HYPERPLANES, CHAMBER_MAX_VERTICES};
pub use param::{in_cminus, in_cplus, in_f, linearisation, theta_i, theta_zero, LineBundleVector, ThetaParam};
pub use weyl::{map_to_f, namikawa_generators, namikawa_order, Generator, MapToF, WeylElement};

use mckay_roots::DynkinType;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ThetaError {
    #[error("n must be at least 1")]
    InvalidN,
    #[error("parameter has {got} coordinates, expected {expected}")]
    Dimension { expected: usize, got: usize },
    #[error("linearisation needs integer input, got {0}")]
    NonInteger(String),
    #[error("{ty} with n={n} exceeds the chamber-counting guard ({detail})")]
    ChamberGuard { ty: DynkinType, n: usize, detail: String },
    #[error("orbit enumeration for {ty} exceeds the guard ({limit})")]
    OrbitGuard { ty: DynkinType, limit: u64 },
    #[error("hyperplane {0:?} is not in the arrangement")]
    NotInArrangement(Vec<i64>),
    #[error("index set must be a nonempty subset of 0..={max}")]
    BadIndexSet { max: usize },
}
