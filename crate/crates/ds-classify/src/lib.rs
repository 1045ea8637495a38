//! Classification of connected graphs by where their distance spectrum sits
//! relative to −1 and −3.
//!
//! The class under study consists of the connected non-complete graphs of
//! order at least four whose distance matrix `D` has third-largest eigenvalue
//! at most −1 and smallest eigenvalue at least −3. Its members turn out to be
//! exactly certain joins of disjoint unions of cliques, built from a handful
//! of named pieces:
//!
//! * `S(m,n) = (mK₂ ∪ nK₁) ∨ (K₅ ∪ K₁)`,
//! * `T₁ = K₄ ∪ K₁`, `T₂ = K₃ ∪ 2K₁`, `T₃ = K₃ ∪ K₁`, `T₄(m,n) = mK₂ ∪ nK₁`,
//!
//! joined either with a clique (`K_r ∨ T_i`) or with one another
//! (`T_i ∨ T_j`). The crate provides
//!
//! * [`FamilySpec`]/[`build_family`] — constructors for every named family,
//! * [`expected_spectrum`] — the closed-form distance spectrum of each
//!   family: fixed integer eigenvalues in {−1, −2, −3} with explicit
//!   multiplicities plus a low-degree polynomial carrying the remaining
//!   eigenvalues,
//! * [`forbidden_pattern`]/[`pattern_catalog`] — the minimal forbidden
//!   induced subgraphs whose absence characterises the class,
//! * [`contains_induced`], [`is_p4_free`], [`join_decompose`] — the search
//!   machinery behind structural recognition,
//! * [`classify_structural`]/[`classify_spectral`] — two independent
//!   deciders for class membership (shape matching vs. exact matrix
//!   inertia), which agree on every graph,
//! * [`is_h_member`] — the finer test for graphs with exactly two distance
//!   eigenvalues outside {−1, −3},
//! * [`multiplicity_certificates`] — exact eigenvector certificates that
//!   pin lower bounds on the multiplicities of −1, −2, −3 (and −4).

mod certificates;
mod classify;
mod family;
mod patterns;
mod search;


pub use certificates::{multiplicity_certificates, Certificate};
pub use classify::{classify_spectral, classify_structural, is_h_member, ClassVerdict, Method, Witness};
pub use family::{build_family, expected_spectrum, ClosedFormSpectrum, FamilySpec, TFactor};
pub use patterns::{forbidden_pattern, pattern_catalog, PatternName, H6_ENV_VAR};
pub use search::{contains_induced, is_p4_free, join_decompose, p4_free_by_subset_connectivity};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error(transparent)]
    Graph(#[from] ds_graph::GraphError),
    #[error(transparent)]
    Exact(#[from] ds_exact::ExactError),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("{0} is disconnected and has no distance spectrum")]
    DisconnectedFamily(String),
    #[error("complete graphs are outside the classified class")]
    CompleteGraph,
    #[error("classification needs order at least 4, got {0}")]
    OrderTooSmall(usize),
    #[error("unknown pattern name `{0}`")]
    UnknownPattern(String),
    #[error("pattern H6 is only available when {H6_ENV_VAR} holds its graph6 encoding: {0}")]
    PatternUnavailable(String),
}
