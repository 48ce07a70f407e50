//! Model zoo and executable theorem suites.

mod report;
mod sttp;
mod suites;
mod zoo;

pub use report::{Check, Outcome, ScenarioReport};
pub use sttp::{build_sttp_omega, extend_tau, multiplication_oracle, omega_from_tau, relation_space, tau_oracle};
pub use suites::{run_theorem_suite, SuiteParams, SUITES};
pub use zoo::{
    r_matrix, random_ybe_seed, satisfies_ybe,
    build_hom_upsilon, build_psi_q, build_psi_q_sg, build_varsigma_on_a, build_varsigma_on_hom, grassmann, k_line,
    plane, plane_named, plane_weights, scaled_flip, u_point, HomUpsilon,
};

use crate::bridge::BridgeError;
use crate::cochain::CochainError;
use crate::linalg::LinalgError;
use crate::space::SpaceError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScenarioError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("σ does not extend to an automorphism of {0}")]
    NotAutomorphism(String),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Cochain(#[from] CochainError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Bridge(#[from] BridgeError),
}
