use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Signature of a real symmetric matrix: counts of positive, zero and
/// negative eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub n_pos: usize,
    pub n_zero: usize,
    pub n_neg: usize,
}

impl Inertia {
    pub fn order(&self) -> usize {
        self.n_pos + self.n_zero + self.n_neg
    }
}

/// Inertia of a symmetric integer matrix, computed exactly.
///
/// Repeatedly splits off a 1×1 or 2×2 block by congruence and recurses on a
/// positively-scaled Schur complement (Haynsworth additivity; positive
/// scaling never moves an eigenvalue across zero). Every intermediate matrix
/// is divided by the gcd of its entries, which keeps coefficient growth in
/// check without leaving the integers.
pub fn inertia_symmetric(m: &IntMatrix) -> Inertia {
    assert!(m.is_symmetric(), "inertia requires a symmetric matrix");
    let n = m.rows();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut out = Inertia { n_pos: 0, n_zero: 0, n_neg: 0 };

    while !a.is_empty() {
        let k = a.len();
        let mut g = BigInt::zero();
        for row in &a {
            for x in row {
                g = g.gcd(x);
            }
        }
        if g.is_zero() {
            out.n_zero += k;
            break;
        }
        if !g.is_one() {
            for row in &mut a {
                for x in row.iter_mut() {
                    *x = &*x / &g;
                }
            }
        }

        // Smallest-magnitude nonzero diagonal entry keeps the scale factor
        // of the Schur complement small.
        let pivot = (0..k)
            .filter(|&i| !a[i][i].is_zero())
            .min_by_key(|&i| a[i][i].magnitude().clone());

        if let Some(i) = pivot {
            let d = a[i][i].clone();
            let s = if d.is_positive() { 1 } else { -1 };
            if s > 0 {
                out.n_pos += 1;
            } else {
                out.n_neg += 1;
            }
            let rest: Vec<usize> = (0..k).filter(|&u| u != i).collect();
            let mut b = vec![vec![BigInt::zero(); k - 1]; k - 1];
            for (p, &u) in rest.iter().enumerate() {
                for (q, &v) in rest.iter().enumerate().skip(p) {
                    let val = &d * &a[u][v] - &a[u][i] * &a[v][i];
                    let val = if s > 0 { val } else { -val };
                    b[p][q] = val.clone();
                    b[q][p] = val;
                }
            }
            a = b;
            continue;
        }

        // Zero diagonal: pick any nonzero off-diagonal entry a_ij. The
        // block [[0, x], [x, 0]] contributes one eigenvalue of each sign,
        // and its Schur complement (scaled by |x| > 0) stays integral.
        let (i, j, x) = 'found: {
            for i in 0..k {
                for j in i + 1..k {
                    if !a[i][j].is_zero() {
                        break 'found (i, j, a[i][j].clone());
                    }
                }
            }
            // gcd was nonzero, so some entry is nonzero somewhere
            unreachable!("nonzero matrix with zero diagonal has an off-diagonal entry");
        };
        out.n_pos += 1;
        out.n_neg += 1;
        let sx = if x.is_positive() { 1 } else { -1 };
        let ax = x.abs();
        let rest: Vec<usize> = (0..k).filter(|&u| u != i && u != j).collect();
        let mut b = vec![vec![BigInt::zero(); k - 2]; k - 2];
        for (p, &u) in rest.iter().enumerate() {
            for (q, &v) in rest.iter().enumerate().skip(p) {
                let cross = &a[u][i] * &a[v][j] + &a[u][j] * &a[v][i];
                let val = &ax * &a[u][v] - if sx > 0 { cross } else { -cross };
                b[p][q] = val.clone();
                b[q][p] = val;
            }
        }
        a = b;
    }
    out
}

/// Inertia of D + t·I for the distance matrix of a connected graph; the
/// sign patterns of D + I and D + 3I are what the membership tests read.
pub fn inertia_shifted(d: &ds_graph::DistanceMatrix, t: i64) -> Inertia {
    inertia_symmetric(&IntMatrix::from_distance_shifted(d, t))
}
