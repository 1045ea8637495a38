//! Induced-subgraph search, P₄-freeness and join decomposition.

use crate::ClassifyError;
use ds_graph::{Graph, GraphError};

/// Finds an induced copy of `pattern` inside `g`: an injective vertex map
/// preserving both adjacency and non-adjacency. Returns the image of each
/// pattern vertex, or `None` when no copy exists (in particular whenever
/// the pattern is larger than `g`).
///
/// Backtracking assigns pattern vertices in index order and tries host
/// candidates in ascending order, so the embedding found first is
/// deterministic. Candidates are pruned by degree (an induced image needs
/// at least the pattern vertex's degree) and by adjacency consistency with
/// everything already placed.
pub fn contains_induced(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.n() > g.n() {
        return None;
    }
    let pattern_degrees: Vec<usize> = (0..pattern.n()).map(|i| pattern.degree(i)).collect();
    let mut image = vec![0usize; pattern.n()];
    let mut used = vec![false; g.n()];
    if place(g, pattern, &pattern_degrees, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

fn place(
    g: &Graph,
    pattern: &Graph,
    pattern_degrees: &[usize],
    i: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if i == pattern.n() {
        return true;
    }
    for w in 0..g.n() {
        if used[w] || g.degree(w) < pattern_degrees[i] {
            continue;
        }
        if (0..i).any(|j| g.has_edge(w, image[j]) != pattern.has_edge(i, j)) {
            continue;
        }
        image[i] = w;
        used[w] = true;
        if place(g, pattern, pattern_degrees, i + 1, image, used) {
            return true;
        }
        used[w] = false;
    }
    false
}

/// Whether `g` has no induced P₄ (i.e. is a cograph).
pub fn is_p4_free(g: &Graph) -> bool {
    let p4 = Graph::path(4).expect("P4 is constructible");
    contains_induced(g, &p4).is_none()
}

/// P₄-freeness decided from first principles: every induced subgraph on at
/// least two vertices must be disconnected or have a disconnected
/// complement. Walks all 2ⁿ vertex subsets, so it is strictly a small-n
/// cross-check for [`is_p4_free`].
pub fn p4_free_by_subset_connectivity(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 20, "subset sweep is exponential; use is_p4_free instead");
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() < 2 {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let h = g.induced_subgraph(&vs).expect("subset of existing vertices");
        if h.is_connected() && h.complement().is_connected() {
            return false;
        }
    }
    true
}

/// Vertex sets of the complement's connected components, each sorted,
/// ordered by least vertex. These are exactly the factors of the maximal
/// join decomposition of `g`.
pub(crate) fn complement_components(g: &Graph) -> Vec<Vec<usize>> {
    g.complement().connected_components()
}

/// The maximal join decomposition of a connected graph: `g` is the join of
/// the returned factors, and none of them decomposes further (a factor's
/// complement, taken within the factor, is connected). A single factor
/// means `g` is not a join at all. Factors are ordered by their least
/// original vertex.
pub fn join_decompose(g: &Graph) -> Result<Vec<Graph>, ClassifyError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    complement_components(g)
        .iter()
        .map(|part| Ok(g.induced_subgraph(part)?))
        .collect()
}
