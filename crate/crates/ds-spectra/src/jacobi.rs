use crate::SpectraError;

const SYMMETRY_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// All eigenvalues of a real symmetric matrix, ascending, via cyclic Jacobi
/// rotations with a fixed sweep order (so results are deterministic).
///
/// Convergence is declared once the off-diagonal Frobenius norm drops below
/// 1e-12 times the initial Frobenius norm of the whole matrix. A hundred
/// sweeps is far beyond what Jacobi needs at these sizes, so running out of
/// sweeps signals a bug rather than a hard input.
pub fn eigenvalues_sym(m: &[Vec<f64>]) -> Result<Vec<f64>, SpectraError> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        assert_eq!(row.len(), n, "matrix must be square");
        for j in 0..i {
            if (row[j] - m[j][i]).abs() > SYMMETRY_TOL {
                return Err(SpectraError::NonSymmetric { i, j });
            }
        }
    }
    if n == 0 {
        return Ok(Vec::new());
    }

    let mut a: Vec<Vec<f64>> = m.to_vec();
    let frob: f64 = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    let target = SYMMETRY_TOL * frob;

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| 2.0 * a[i][j] * a[i][j])
            .sum::<f64>()
            .sqrt();
        if off <= target {
            let mut eigs: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
            eigs.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
            return Ok(eigs);
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                // classic two-sided rotation choosing the smaller angle
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    Err(SpectraError::NoConvergence(MAX_SWEEPS))
}
