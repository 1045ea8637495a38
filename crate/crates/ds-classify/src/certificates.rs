//! Exact eigenvector certificates for integer distance eigenvalues.
//!
//! Twin structure forces integer eigenvalues on the distance matrix, and
//! the forcing is constructive:
//!
//! * a set of p ≥ 2 vertices with identical closed neighbourhoods (true
//!   twins — they form a clique) gives −1 with multiplicity ≥ p − 1, with
//!   eigenvectors e_{v₁} − e_{vᵢ};
//! * m ≥ 2 disjoint r-cliques, pairwise non-adjacent, all of whose vertices
//!   share the same neighbourhood outside the configuration, give −(r+1)
//!   with multiplicity ≥ m − 1, with eigenvectors 1_{C₁} − 1_{Cᵢ}
//!   (r = 1: independent sets with a common neighbourhood force −2;
//!   r = 2: induced matchings force −3).
//!
//! Every witness vector is verified against the distance matrix entrywise
//! in integer arithmetic before it is returned.

use crate::ClassifyError;
use ds_graph::{DistanceMatrix, Graph};
use std::collections::BTreeMap;

/// A certified lower bound: `lower_bound` linearly independent integer
/// vectors, each satisfying D·x = eigenvalue·x exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub eigenvalue: i64,
    pub lower_bound: usize,
    pub witnesses: Vec<Vec<i64>>,
}

/// Collects all twin-forced certificates for the eigenvalues −1, −2, −3
/// and −4, one certificate per eigenvalue, sorted by descending eigenvalue.
/// Certificates from disjoint vertex groups add up: their witnesses have
/// disjoint supports, hence stay independent when pooled.
pub fn multiplicity_certificates(g: &Graph) -> Result<Vec<Certificate>, ClassifyError> {
    let d = g.distance_matrix()?;
    let n = g.n();

    // Group vertices into true-twin classes by closed neighbourhood.
    let mut classes: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let mut closed: Vec<usize> = g.neighbors(v).collect();
        closed.push(v);
        closed.sort_unstable();
        classes.entry(closed).or_default().push(v);
    }

    let mut pooled: BTreeMap<i64, Vec<Vec<i64>>> = BTreeMap::new();

    // True-twin classes: p − 1 witnesses for −1 each.
    for class in classes.values() {
        for &v in &class[1..] {
            let mut x = vec![0i64; n];
            x[class[0]] = 1;
            x[v] = -1;
            pooled.entry(-1).or_default().push(x);
        }
    }

    // Classes of size exactly r sharing their outside neighbourhood. Such
    // classes are automatically pairwise non-adjacent (a vertex of one
    // inside the other's neighbourhood would have to lie in the common
    // outside set, which excludes the classes themselves), so m of them
    // form the m·K_r configuration forcing −(r+1).
    for r in 1..=3usize {
        let mut buckets: BTreeMap<Vec<usize>, Vec<&Vec<usize>>> = BTreeMap::new();
        for (closed, class) in &classes {
            if class.len() != r {
                continue;
            }
            let outside: Vec<usize> =
                closed.iter().copied().filter(|v| !class.contains(v)).collect();
            buckets.entry(outside).or_default().push(class);
        }
        for group in buckets.values() {
            for other in &group[1..] {
                let mut x = vec![0i64; n];
                for &v in group[0].iter() {
                    x[v] = 1;
                }
                for &v in other.iter() {
                    x[v] = -1;
                }
                pooled.entry(-(r as i64 + 1)).or_default().push(x);
            }
        }
    }

    let mut certificates = Vec::with_capacity(pooled.len());
    for (eigenvalue, witnesses) in pooled.into_iter().rev() {
        for x in &witnesses {
            assert!(
                is_exact_eigenvector(&d, x, eigenvalue),
                "twin-structure witness must satisfy D·x = {eigenvalue}·x"
            );
        }
        certificates.push(Certificate {
            eigenvalue,
            lower_bound: witnesses.len(),
            witnesses,
        });
    }
    Ok(certificates)
}

fn is_exact_eigenvector(d: &DistanceMatrix, x: &[i64], eigenvalue: i64) -> bool {
    (0..d.n()).all(|u| {
        let row_sum: i64 = (0..d.n()).map(|j| i64::from(d.get(u, j)) * x[j]).sum();
        row_sum == eigenvalue * x[u]
    })
}
