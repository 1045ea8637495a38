//! Vertex orbits of the automorphism group, by exhaustive search.
//!
//! Two vertices share an orbit exactly when some automorphism maps one to
//! the other, so the orbit partition is built by union-find: for each pair
//! of vertices not yet known equivalent, run a backtracking search for one
//! automorphism sending u to t, and on success merge v with σ(v) for every
//! vertex. A failed search is a proof of inequivalence, so each unordered
//! pair is attempted at most once. Practical only for small orders; capped
//! at 10 vertices.

use crate::{Partition, PartitionError};
use ds_graph::{DistanceMatrix, Graph};

const MAX_ORDER: usize = 10;

/// Partition of the vertices into automorphism orbits. Connected graphs
/// only (distance rows drive the pruning) and order at most 10.
pub fn orbit_partition(g: &Graph) -> Result<Partition, PartitionError> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(PartitionError::OrderTooLarge(n));
    }
    let d = g.distance_matrix()?;
    // Sorted distance rows: a permutation can only map v to w if their rows
    // agree as multisets. This alone splits most non-equivalent pairs.
    let invariant: Vec<Vec<u16>> = (0..n)
        .map(|v| {
            let mut row = d.row(v).to_vec();
            row.sort_unstable();
            row
        })
        .collect();

    let mut parent: Vec<usize> = (0..n).collect();
    for u in 0..n {
        for t in (u + 1)..n {
            if find(&mut parent, u) == find(&mut parent, t) || invariant[u] != invariant[t] {
                continue;
            }
            let mut image = vec![usize::MAX; n];
            let mut used = vec![false; n];
            if search(&d, &invariant, u, t, 0, &mut image, &mut used) {
                for v in 0..n {
                    union(&mut parent, v, image[v]);
                }
            }
        }
    }

    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        let r = find(&mut parent, v);
        cells[r].push(v);
    }
    cells.retain(|cell| !cell.is_empty());
    cells.sort_by_key(|cell| cell[0]);
    Ok(Partition::from_canonical(n, cells))
}

fn find(parent: &mut [usize], v: usize) -> usize {
    let mut r = v;
    while parent[r] != r {
        r = parent[r];
    }
    let mut v = v;
    while parent[v] != r {
        let next = parent[v];
        parent[v] = r;
        v = next;
    }
    r
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let ra = find(parent, a);
    let rb = find(parent, b);
    if ra != rb {
        parent[rb] = ra;
    }
}

/// Extends a partial vertex map (vertices 0..i already assigned) to an
/// automorphism with image[pin_from] = pin_to. Preserving all distances is
/// the same as preserving adjacency (d = 1 ⟺ edge) but fails branches
/// sooner.
fn search(
    d: &DistanceMatrix,
    invariant: &[Vec<u16>],
    pin_from: usize,
    pin_to: usize,
    i: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let n = d.n();
    if i == n {
        return true;
    }
    let candidates: Vec<usize> = if i == pin_from {
        vec![pin_to]
    } else {
        (0..n).filter(|&w| invariant[i] == invariant[w]).collect()
    };
    for w in candidates {
        if used[w] || (0..i).any(|j| d.get(i, j) != d.get(w, image[j])) {
            continue;
        }
        image[i] = w;
        used[w] = true;
        if search(d, invariant, pin_from, pin_to, i + 1, image, used) {
            return true;
        }
        used[w] = false;
    }
    image[i] = usize::MAX;
    false
}
