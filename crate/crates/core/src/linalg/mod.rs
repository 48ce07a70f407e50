//! Exact rational matrices and subspaces.

mod matrix;
mod rational;
mod subspace;

pub use matrix::Matrix;
pub use rational::{format_rational, frac, one, parse_rational, q, qpow, zero, Q};
pub use subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("not a rational literal: {0:?}")]
    BadRational(String),
}
