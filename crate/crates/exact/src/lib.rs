//! Exact arithmetic building blocks: rational and small prime fields,
//! dense matrices with echelon forms, and an exact simplex feasibility test.

pub mod field;
pub mod lp;
pub mod matrix;
pub mod subspace;
pub mod univariate;

pub use field::{parse_rational, q, rational_to_string, Field, Fp, F2, F3, Q};
pub use matrix::{Matrix, ShapeError};
