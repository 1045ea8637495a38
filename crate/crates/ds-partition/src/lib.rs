//! Distance-equitable partitions and their divisor matrices.
//!
//! A partition V₁ ∪ … ∪ V_k of a connected graph's vertices is
//! *distance-equitable* when, for every pair of cells (i, j), the total
//! distance from a vertex of V_i to the whole of V_j does not depend on
//! which vertex of V_i is asked. Those cell-to-cell totals form the k×k
//! divisor matrix B, a small integer matrix whose characteristic polynomial
//! divides that of the full distance matrix and whose largest eigenvalue is
//! the distance spectral radius. This crate finds such partitions (by
//! signature refinement, or from the automorphism orbits of small graphs),
//! builds B, and checks the three claims — commutation, divisibility, and
//! the shared radius — exactly where possible.

mod divisor;
mod equitable;
mod orbit;

pub use divisor::{
    divisor_matrix, verify_commutation, verify_divisibility, verify_radius, DivisorMatrix,
};
pub use equitable::{is_distance_equitable, refine_distance_equitable};
pub use orbit::orbit_partition;

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum PartitionError {
    #[error(transparent)]
    Graph(#[from] ds_graph::GraphError),
    #[error("partition has an empty cell")]
    EmptyCell,
    #[error("vertex {v} is outside 0..{n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("vertex {0} appears in more than one cell")]
    VertexRepeated(usize),
    #[error("vertex {0} is in no cell")]
    VertexMissing(usize),
    #[error("partition is over {partition} vertices but the graph has {graph}")]
    OrderMismatch { graph: usize, partition: usize },
    #[error("partition is not distance-equitable, so it has no divisor matrix")]
    NotEquitable,
    #[error("order {0} is too large for exhaustive automorphism search (limit 10)")]
    OrderTooLarge(usize),
}

/// A partition of {0, …, n−1} into nonempty cells. Kept in a canonical
/// shape — each cell sorted, cells ordered by least element — so that equal
/// partitions compare equal regardless of how they were assembled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    cells: Vec<Vec<usize>>,
}

impl Partition {
    /// Builds a partition of {0, …, n−1} from the given cells, normalising
    /// their order. Every vertex must appear in exactly one cell.
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let mut seen = vec![false; n];
        for cell in &cells {
            if cell.is_empty() {
                return Err(PartitionError::EmptyCell);
            }
            for &v in cell {
                if v >= n {
                    return Err(PartitionError::VertexOutOfRange { v, n });
                }
                if seen[v] {
                    return Err(PartitionError::VertexRepeated(v));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(PartitionError::VertexMissing(v));
        }
        let mut cells = cells;
        for cell in &mut cells {
            cell.sort_unstable();
        }
        cells.sort_by_key(|cell| cell[0]);
        Ok(Partition { n, cells })
    }

    /// The one-cell partition {V}.
    pub fn unit(n: usize) -> Self {
        assert!(n > 0, "partition of the empty vertex set");
        Partition { n, cells: vec![(0..n).collect()] }
    }

    /// The all-singletons partition.
    pub fn discrete(n: usize) -> Self {
        assert!(n > 0, "partition of the empty vertex set");
        Partition { n, cells: (0..n).map(|v| vec![v]).collect() }
    }

    /// Internal constructor for cells already in canonical shape.
    pub(crate) fn from_canonical(n: usize, cells: Vec<Vec<usize>>) -> Self {
        debug_assert!(cells.iter().all(|c| c.windows(2).all(|w| w[0] < w[1])));
        debug_assert!(cells.windows(2).all(|w| w[0][0] < w[1][0]));
        debug_assert_eq!(cells.iter().map(Vec::len).sum::<usize>(), n);
        Partition { n, cells }
    }

    /// Number of vertices partitioned.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of cells.
    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    /// Index of the cell containing `v`.
    pub fn cell_of(&self, v: usize) -> usize {
        assert!(v < self.n, "vertex out of range");
        self.cells
            .iter()
            .position(|cell| cell.binary_search(&v).is_ok())
            .expect("every vertex lies in a cell")
    }

    /// Is every cell of `self` contained in a cell of `coarser`?
    pub fn refines(&self, coarser: &Partition) -> bool {
        if self.n != coarser.n {
            return false;
        }
        self.cells
            .iter()
            .all(|cell| {
                let host = coarser.cell_of(cell[0]);
                cell.iter().all(|&v| coarser.cells[host].binary_search(&v).is_ok())
            })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, cell) in self.cells.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            for (j, v) in cell.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        write!(f, "}}")
    }
}

/// Shared precondition: the partition must be over the graph's vertex set.
pub(crate) fn check_order(g: &ds_graph::Graph, p: &Partition) -> Result<(), PartitionError> {
    if g.n() != p.n() {
        return Err(PartitionError::OrderMismatch { graph: g.n(), partition: p.n() });
    }
    Ok(())
}
