//! Subcommands behind the `mckay` binary and the acceptance suite that
//! `mckay selftest` runs.

pub mod acceptance;
pub mod commands;
pub mod render;

use mckay_kleinian::KleinianError;
use mckay_recollement::RecollementError;
use mckay_reps::RepError;
use mckay_roots::RootError;
use mckay_theta::ThetaError;

pub use render::{render, Format};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Guard(String),
    /// Carries the partial report that is still printed.
    #[error("result not certified")]
    Uncertified(serde_json::Value),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) | CliError::Io(_) => 2,
            CliError::Guard(_) => 3,
            CliError::Uncertified(_) => 4,
        }
    }
}

impl From<RootError> for CliError {
    fn from(e: RootError) -> Self {
        match e {
            RootError::TooLarge { .. } => CliError::Guard(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<ThetaError> for CliError {
    fn from(e: ThetaError) -> Self {
        match e {
            ThetaError::ChamberGuard { .. } | ThetaError::OrbitGuard { .. } => CliError::Guard(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<RepError> for CliError {
    fn from(e: RepError) -> Self {
        match e {
            RepError::BruteForceGuard { .. } => CliError::Guard(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<KleinianError> for CliError {
    fn from(e: KleinianError) -> Self {
        match e {
            KleinianError::Eigen(inner) => inner.into(),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<RecollementError> for CliError {
    fn from(e: RecollementError) -> Self {
        match e {
            RecollementError::Kleinian(inner) => inner.into(),
            RecollementError::Rep(inner) => inner.into(),
            other => CliError::Validation(other.to_string()),
        }
    }
}
