//! Exhaustive verification harness: connected-graph enumeration with
//! isomorphism reduction, graph sources (internal generator, graph6 files,
//! single graphs, parameterized families), and the campaign runners that
//! sweep a theorem-shaped check over a source and report every failure.
//!
//! Enumeration is complete over labeled graphs up to order 8; canonical
//! forms (lexicographically least adjacency bit string over all vertex
//! permutations) are available up to order 11 and power both isomorphism
//! testing and deduplication.

mod campaigns;
mod enumerate;
mod report;
mod source;


pub use campaigns::{
    campaign_appendix_a, campaign_dds, campaign_partitions, campaign_theorem_3_14,
    campaign_theorem_4_2, describe_verdict, AppendixGrid, CampaignOptions,
};
pub use enumerate::{
    are_isomorphic, canonical_form, enumerate_connected, enumerate_connected_classes,
};
pub use report::{Failure, VerificationReport};
pub use source::{load_graph6, read_graph6_stream, GraphSource};

use ds_classify::ClassifyError;
use ds_graph::{Graph6Error, GraphError};
use ds_partition::PartitionError;
use ds_spectra::SpectraError;

/// Errors from enumeration, ingestion, and campaign plumbing. Domain errors
/// from the underlying crates pass through transparently.
#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("line {line}: {source}")]
    BadLine {
        line: usize,
        source: Graph6Error,
    },
    #[error("enumeration order must be between 1 and 8, got {0}")]
    EnumerationOrder(usize),
    #[error("isomorphism dedup is capped at order 7, got {0}")]
    DedupTooLarge(usize),
    #[error("canonical forms are capped at order 11, got {0}")]
    OrderTooLargeForCanonical(usize),
    #[error("{0}")]
    BadTarget(String),
}
