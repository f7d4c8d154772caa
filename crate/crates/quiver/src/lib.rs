//! Quivers built from McKay graphs: doubling, framing at ρ₀, the sign
//! convention ε, preprojective relation terms, and the algebra A₀.

pub mod a0;
pub mod quiver;

pub use a0::{a0_identity, a0_multiply, r0_normal_form, A0Element};
pub use quiver::{
    default_sign, double, frame, preprojective_terms, Arrow, DoubledQuiver, PreprojectiveTerm, Quiver,
    SignFunction, TypeAOrientation, Vertex,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuiverError {
    #[error("quiver is already framed")]
    AlreadyFramed,
    #[error("quiver has no vertex rho0 to frame at")]
    NoExtendedVertex,
    #[error("unsupported type {0}: only type A has explicit R0 normal forms")]
    UnsupportedType(mckay_roots::DynkinType),
    #[error("quiver is not the doubled McKay quiver of a type A diagram")]
    NotTypeA,
    #[error("A0 element is not in normal form: {0}")]
    NotNormal(String),
}
