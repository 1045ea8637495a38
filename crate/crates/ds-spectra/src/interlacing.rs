use crate::jacobi::eigenvalues_sym;
use crate::SpectraError;
use ds_graph::Graph;

const SLACK: f64 = 1e-8;

/// Cauchy interlacing between a graph's distance matrix and that of an
/// induced subgraph on the vertex set `s`.
///
/// The induced subgraph must be connected with diameter at most two: that is
/// precisely when its internal distances agree with the host's, making its
/// distance matrix a principal submatrix. A diameter-three induced path in
/// the five-cycle already breaks the containment, so larger diameters are
/// rejected loudly rather than checked meaninglessly.
///
/// Returns whether λ_{n−m+i}(G) ≤ μ_i(H) ≤ λ_i(G) holds for every i (with
/// descending eigenvalues and a small numeric slack).
pub fn interlacing_check(g: &Graph, s: &[usize]) -> Result<bool, SpectraError> {
    let h = g.induced_subgraph(s)?;
    let diam = h.diameter()?; // errors if the subgraph is disconnected
    if diam >= 3 {
        return Err(SpectraError::DiameterTooLarge(diam));
    }
    let dg = g.distance_matrix()?;

    let mut lambda = eigenvalues_sym(&dg.to_f64())?;
    lambda.reverse();
    let mut mu = eigenvalues_sym(&h.distance_matrix()?.to_f64())?;
    mu.reverse();

    let n = lambda.len();
    let m = mu.len();
    Ok((0..m).all(|i| lambda[n - m + i] <= mu[i] + SLACK && mu[i] <= lambda[i] + SLACK))
}
