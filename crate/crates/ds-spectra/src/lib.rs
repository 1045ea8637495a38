//! Floating-point distance spectra, anchored to exact arithmetic.
//!
//! Eigenvalues come from a cyclic Jacobi solver; the multiplicities of the
//! integer eigenvalues −1, −2 and −3 (the ones the classification theorems
//! hinge on) are then replaced by exact ranks, so no tolerance choice can
//! silently inflate or deflate them. Any disagreement between the float
//! clustering and the exact count is a hard error, never a shrug.

mod interlacing;
mod jacobi;
mod spectrum;

pub use interlacing::interlacing_check;
pub use jacobi::eigenvalues_sym;
pub use spectrum::{distance_spectrum, spectra_equal, trace_residual, Spectrum, SpectrumEntry};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SpectraError {
    #[error(transparent)]
    Graph(#[from] ds_graph::GraphError),
    #[error("matrix entry ({i},{j}) differs from its transpose by more than 1e-12")]
    NonSymmetric { i: usize, j: usize },
    #[error("Jacobi sweep failed to converge after {0} sweeps (solver bug)")]
    NoConvergence(usize),
    #[error(
        "eigenvalue {value}: exact multiplicity {exact} but float cluster of size {clustered}"
    )]
    ClusterMismatch { value: i64, exact: usize, clustered: usize },
    #[error("two eigenvalue clusters are separated by less than ten times the grouping tolerance")]
    GroupingAmbiguous,
    #[error("induced subgraph has diameter {0} >= 3, so its distance matrix need not embed")]
    DiameterTooLarge(u16),
}
