use crate::poly::IntPoly;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    r: usize,
    c: usize,
    a: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(r: usize, c: usize) -> Self {
        assert!(r >= 1 && c >= 1, "matrix dimensions must be positive");
        IntMatrix { r, c, a: vec![BigInt::zero(); r * c] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_fn(r: usize, c: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut m = IntMatrix::zeros(r, c);
        for i in 0..r {
            for j in 0..c {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    /// The distance matrix as an exact integer matrix, optionally shifted to
    /// D + t·I.
    pub fn from_distance_shifted(d: &ds_graph::DistanceMatrix, t: i64) -> Self {
        IntMatrix::from_fn(d.n(), d.n(), |i, j| {
            let mut x = BigInt::from(d.get(i, j));
            if i == j {
                x += t;
            }
            x
        })
    }

    pub fn rows(&self) -> usize {
        self.r
    }

    pub fn cols(&self) -> usize {
        self.c
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.a[i * self.c + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.a[i * self.c + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        self.r == self.c
            && (0..self.r).all(|i| (i + 1..self.c).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

/// Characteristic polynomial det(xI − m), monic, by the Berkowitz vector
/// recurrence. Division-free: every intermediate is an integer, so there is
/// no rational bookkeeping and no rounding anywhere.
pub fn char_poly(m: &IntMatrix) -> IntPoly {
    assert_eq!(m.rows(), m.cols(), "characteristic polynomial needs a square matrix");
    let n = m.rows();
    // Coefficients of det(xI − A_r) for the leading r×r block, descending.
    let mut p = vec![BigInt::one()];
    for r in 0..n {
        // First column of the (r+2)×(r+1) Toeplitz operator:
        // [1, −a_rr, −R·S, −R·M·S, …] with M the leading block, R the new
        // row, S the new column.
        let mut col = Vec::with_capacity(r + 2);
        col.push(BigInt::one());
        col.push(-m.get(r, r).clone());
        let mut w: Vec<BigInt> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for k in 2..=(r + 1) {
            let dot: BigInt = (0..r).map(|i| m.get(r, i) * &w[i]).sum();
            col.push(-dot);
            if k <= r {
                w = (0..r)
                    .map(|i| (0..r).map(|j| m.get(i, j) * &w[j]).sum())
                    .collect();
            }
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, pj) in p.iter().enumerate().take(i + 1) {
                if i - j < col.len() {
                    *slot += &col[i - j] * pj;
                }
            }
        }
        p = next;
    }
    IntPoly::from_descending(p)
}

/// Exact rank over the rationals via fraction-free Bareiss elimination with
/// full pivoting. The division by the previous pivot is exact (Sylvester's
/// identity), so entries stay integral and polynomially bounded.
pub fn rank(m: &IntMatrix) -> usize {
    let (r, c) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> =
        (0..r).map(|i| (0..c).map(|j| m.get(i, j).clone()).collect()).collect();
    let mut prev = BigInt::one();
    let mut rk = 0;
    while rk < r.min(c) {
        // any nonzero entry of the trailing block can serve as pivot
        let Some((pi, pj)) = (rk..r)
            .flat_map(|i| (rk..c).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i][j].is_zero())
        else {
            break;
        };
        a.swap(rk, pi);
        if pj != rk {
            for row in a.iter_mut() {
                row.swap(rk, pj);
            }
        }
        for u in (rk + 1)..r {
            for v in (rk + 1)..c {
                let num = &a[rk][rk] * &a[u][v] - &a[u][rk] * &a[rk][v];
                a[u][v] = num / &prev; // exact
            }
            a[u][rk] = BigInt::zero();
        }
        prev = a[rk][rk].clone();
        rk += 1;
    }
    rk
}

/// Determinant via the same fraction-free elimination (used by tests and the
/// inertia cross-checks; sign tracked through the row/column swaps).
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert_eq!(m.rows(), m.cols());
    let n = m.rows();
    let mut a: Vec<Vec<BigInt>> =
        (0..n).map(|i| (0..n).map(|j| m.get(i, j).clone()).collect()).collect();
    let mut prev = BigInt::one();
    let mut sign = 1i8;
    for k in 0..n {
        let Some((pi, pj)) = (k..n)
            .flat_map(|i| (k..n).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i][j].is_zero())
        else {
            return BigInt::zero();
        };
        if pi != k {
            a.swap(k, pi);
            sign = -sign;
        }
        if pj != k {
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
            sign = -sign;
        }
        for u in (k + 1)..n {
            for v in (k + 1)..n {
                let num = &a[k][k] * &a[u][v] - &a[u][k] * &a[k][v];
                a[u][v] = num / &prev;
            }
            a[u][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    if sign < 0 {
        -prev
    } else {
        prev
    }
}
