//! Divisor matrices of distance-equitable partitions and the three spectral
//! facts they certify: commutation with the distance matrix, divisibility of
//! characteristic polynomials, and agreement of spectral radii.

use crate::equitable::equitable_table;
use crate::{check_order, Partition, PartitionError};
use ds_exact::{char_poly, poly_divides, real_roots, IntMatrix, IntPoly};
use ds_graph::Graph;
use num_bigint::BigInt;
use std::fmt;

/// Agreement tolerance for the spectral-radius check. Roots are isolated to
/// much better than this, so the slack only absorbs float conversion.
const RADIUS_TOL: f64 = 1e-8;

/// The k×k matrix B of a distance-equitable partition: B[i][j] is the total
/// distance from any vertex of cell i to all of cell j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorMatrix {
    b: Vec<Vec<u64>>,
}

impl DivisorMatrix {
    /// Number of cells (the matrix is size × size).
    pub fn size(&self) -> usize {
        self.b.len()
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.b[i][j]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.b
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        let k = self.size();
        IntMatrix::from_fn(k, k, |i, j| BigInt::from(self.b[i][j]))
    }

    /// Characteristic polynomial det(xI − B), computed exactly.
    pub fn char_poly(&self) -> IntPoly {
        char_poly(&self.to_int_matrix())
    }
}

impl fmt::Display for DivisorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .b
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for (i, row) in self.b.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Divisor matrix of a distance-equitable partition; NotEquitable if any
/// cell sees a cell unevenly. Rows follow the partition's cell order.
pub fn divisor_matrix(g: &Graph, p: &Partition) -> Result<DivisorMatrix, PartitionError> {
    check_order(g, p)?;
    let d = g.distance_matrix()?;
    let b = equitable_table(&d, p.cells()).ok_or(PartitionError::NotEquitable)?;
    Ok(DivisorMatrix { b })
}

/// Checks D·C = C·B entry by entry in exact integers, where C is the 0/1
/// cell-membership matrix (n×k). True for every distance-equitable
/// partition; the multiplication is still carried out in full rather than
/// assumed.
pub fn verify_commutation(g: &Graph, p: &Partition) -> Result<bool, PartitionError> {
    let b = divisor_matrix(g, p)?;
    let d = g.distance_matrix()?;
    let n = g.n();
    let k = p.cell_count();
    let cell_of: Vec<usize> = (0..n).map(|v| p.cell_of(v)).collect();
    for v in 0..n {
        for j in 0..k {
            let dc: u64 = p.cells()[j].iter().map(|&u| d.get(v, u) as u64).sum();
            // C has a single 1 in row v, at column cell_of(v).
            let cb = b.get(cell_of[v], j);
            if dc != cb {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Does the characteristic polynomial of B divide that of the distance
/// matrix? Exact integer polynomial division, no tolerances.
pub fn verify_divisibility(g: &Graph, p: &Partition) -> Result<bool, PartitionError> {
    let b = divisor_matrix(g, p)?;
    let d = g.distance_matrix()?;
    let phi_d = char_poly(&IntMatrix::from_distance_shifted(&d, 0));
    let phi_b = b.char_poly();
    Ok(poly_divides(&phi_b, &phi_d).expect("characteristic polynomials are nonzero"))
}

/// Is the largest eigenvalue of B the distance spectral radius of the graph?
/// Both are extracted as real roots of exact characteristic polynomials and
/// compared within 1e-8. (B is a nonnegative integer matrix, so its spectral
/// radius is one of its real eigenvalues.)
pub fn verify_radius(g: &Graph, p: &Partition) -> Result<bool, PartitionError> {
    let b = divisor_matrix(g, p)?;
    let d = g.distance_matrix()?;
    let phi_d = char_poly(&IntMatrix::from_distance_shifted(&d, 0));
    let radius_d = largest_root(&phi_d);
    let radius_b = largest_root(&b.char_poly());
    Ok((radius_d - radius_b).abs() <= RADIUS_TOL)
}

fn largest_root(p: &IntPoly) -> f64 {
    let roots = real_roots(p, 1e-10).expect("characteristic polynomial is nonzero");
    roots
        .last()
        .map(|&(value, _)| value)
        .expect("a nonnegative matrix has a real eigenvalue")
}
