//! Recognising distance-equitable partitions and refining seeds into them.

use crate::{check_order, Partition, PartitionError};
use ds_graph::{DistanceMatrix, Graph};
use std::collections::BTreeMap;

/// Row of cell-distance totals for one vertex: entry j is Σ_{u ∈ V_j} d(v, u).
pub(crate) fn signature(d: &DistanceMatrix, cells: &[Vec<usize>], v: usize) -> Vec<u64> {
    let row = d.row(v);
    cells
        .iter()
        .map(|cell| cell.iter().map(|&u| row[u] as u64).sum())
        .collect()
}

/// If the partition is distance-equitable, the table of per-cell signatures
/// (one row per cell); otherwise None. Checks *every* vertex of every cell,
/// so a representative can never paper over an uneven cell.
pub(crate) fn equitable_table(d: &DistanceMatrix, cells: &[Vec<usize>]) -> Option<Vec<Vec<u64>>> {
    let mut table = Vec::with_capacity(cells.len());
    for cell in cells {
        let first = signature(d, cells, cell[0]);
        for &v in &cell[1..] {
            if signature(d, cells, v) != first {
                return None;
            }
        }
        table.push(first);
    }
    Some(table)
}

/// Does every vertex of each cell see every cell at the same total distance?
/// Requires a connected graph (distances must all exist).
pub fn is_distance_equitable(g: &Graph, p: &Partition) -> Result<bool, PartitionError> {
    check_order(g, p)?;
    let d = g.distance_matrix()?;
    Ok(equitable_table(&d, p.cells()).is_some())
}

/// Coarsest distance-equitable partition refining `seed`, found by splitting
/// cells on signature disagreements until a fixpoint.
///
/// Each round recomputes every vertex's signature against the *current*
/// partition and splits all cells simultaneously, so the outcome does not
/// depend on any cell ordering. Splitting is forced (two vertices with
/// different signatures can never share a cell of an equitable refinement),
/// hence the fixpoint really is the coarsest such refinement.
pub fn refine_distance_equitable(g: &Graph, seed: &Partition) -> Result<Partition, PartitionError> {
    check_order(g, seed)?;
    let d = g.distance_matrix()?;
    let mut cells = seed.cells().to_vec();
    loop {
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        for cell in &cells {
            // BTreeMap so the split order is deterministic; vertices arrive
            // sorted, so each new cell is born sorted.
            let mut groups: BTreeMap<Vec<u64>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                groups.entry(signature(&d, &cells, v)).or_default().push(v);
            }
            next.extend(groups.into_values());
        }
        let split = next.len() > cells.len();
        cells = next;
        if !split {
            break;
        }
    }
    cells.sort_by_key(|cell| cell[0]);
    Ok(Partition::from_canonical(g.n(), cells))
}
