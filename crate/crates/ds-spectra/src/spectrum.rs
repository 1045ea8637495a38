use crate::jacobi::eigenvalues_sym;
use crate::SpectraError;
use ds_exact::{rank, IntMatrix};
use ds_graph::Graph;

const GROUP_TOL: f64 = 1e-6;
/// Integer eigenvalues whose multiplicities are pinned down exactly.
const EXACT_VALUES: [i64; 3] = [-1, -2, -3];

/// One line of a spectrum: an eigenvalue with its multiplicity. `exact`
/// marks the integer eigenvalues whose multiplicity was certified by an
/// exact rank computation rather than float clustering.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectrumEntry {
    pub value: f64,
    pub multiplicity: usize,
    pub exact: bool,
}

/// Distance spectrum in the usual ∂₁ ≥ ∂₂ ≥ … ≥ ∂ₙ order, stored as
/// strictly descending (value, multiplicity) groups.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    entries: Vec<SpectrumEntry>,
}

impl Spectrum {
    /// Assembles a spectrum from descending entries; panics if the entries
    /// are not strictly descending or carry zero multiplicities, since that
    /// indicates a bug in the caller, not bad input data.
    pub fn new(entries: Vec<SpectrumEntry>) -> Self {
        assert!(
            entries.windows(2).all(|w| w[0].value > w[1].value),
            "spectrum entries must be strictly descending"
        );
        assert!(entries.iter().all(|e| e.multiplicity > 0), "zero multiplicity");
        Spectrum { entries }
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    /// Number of eigenvalues counted with multiplicity (the graph order).
    pub fn order(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn largest(&self) -> f64 {
        self.entries.first().expect("nonempty spectrum").value
    }

    pub fn smallest(&self) -> f64 {
        self.entries.last().expect("nonempty spectrum").value
    }

    /// Multiplicity of an integer eigenvalue, 0 when absent; only exact
    /// entries are consulted, so the answer is certified.
    pub fn exact_multiplicity(&self, value: i64) -> usize {
        self.entries
            .iter()
            .find(|e| e.exact && e.value == value as f64)
            .map_or(0, |e| e.multiplicity)
    }

    /// Eigenvalues expanded to a flat descending list.
    pub fn expanded(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.order());
        for e in &self.entries {
            out.extend(std::iter::repeat(e.value).take(e.multiplicity));
        }
        out
    }
}

impl std::fmt::Display for Spectrum {
    /// Two-decimal table form, e.g. `[8.78, -0.70, (-1)^5, -3.07]`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let mut v = (e.value * 100.0).round() / 100.0;
            if v == 0.0 {
                v = 0.0; // never print -0.00
            }
            let shown = if e.exact { format!("{}", e.value as i64) } else { format!("{v:.2}") };
            if e.multiplicity == 1 {
                write!(f, "{shown}")?;
            } else {
                write!(f, "({shown})^{}", e.multiplicity)?;
            }
        }
        write!(f, "]")
    }
}

/// The distance spectrum of a connected graph. Float eigenvalues are
/// grouped at 1e-6; the multiplicities of −1, −2 and −3 are replaced by the
/// exact value n − rank(D − λI) and flagged. A float cluster that
/// disagrees with its exact rank count raises `ClusterMismatch` instead of
/// being papered over.
pub fn distance_spectrum(g: &Graph) -> Result<Spectrum, SpectraError> {
    let d = g.distance_matrix()?;
    let n = d.n();
    let eigs = {
        let mut e = eigenvalues_sym(&d.to_f64())?;
        e.reverse(); // descending
        e
    };

    // split the descending list wherever the gap exceeds the tolerance
    let mut clusters: Vec<(f64, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || eigs[i - 1] - eigs[i] > GROUP_TOL {
            let mean = eigs[start..i].iter().sum::<f64>() / (i - start) as f64;
            clusters.push((mean, i - start));
            start = i;
        }
    }
    if clusters.windows(2).any(|w| w[0].0 - w[1].0 < 10.0 * GROUP_TOL) {
        return Err(SpectraError::GroupingAmbiguous);
    }

    let mut entries: Vec<SpectrumEntry> = clusters
        .into_iter()
        .map(|(value, multiplicity)| SpectrumEntry { value, multiplicity, exact: false })
        .collect();

    for lambda in EXACT_VALUES {
        let shifted = IntMatrix::from_distance_shifted(&d, -lambda);
        let exact = n - rank(&shifted);
        let hit = entries.iter_mut().find(|e| (e.value - lambda as f64).abs() <= GROUP_TOL);
        match (exact, hit) {
            (0, None) => {}
            (m, Some(e)) if m == e.multiplicity => {
                e.value = lambda as f64;
                e.exact = true;
            }
            (m, hit) => {
                return Err(SpectraError::ClusterMismatch {
                    value: lambda,
                    exact: m,
                    clustered: hit.map_or(0, |e| e.multiplicity),
                });
            }
        }
    }

    let spectrum = Spectrum::new(entries);
    debug_assert!(
        spectrum.entries.iter().map(|e| e.value * e.multiplicity as f64).sum::<f64>().abs()
            < 1e-6 * (n as f64).max(1.0),
        "distance matrices are traceless"
    );
    debug_assert_eq!(spectrum.order(), n);
    Ok(spectrum)
}

/// Spectrum comparison at a tolerance: orders, grouping and multiplicities
/// must agree, values pairwise within tol — except that entries exact on
/// both sides must agree exactly (integer against integer).
pub fn spectra_equal(a: &Spectrum, b: &Spectrum, tol: f64) -> bool {
    if a.order() != b.order() || a.entries.len() != b.entries.len() {
        return false;
    }
    a.entries.iter().zip(&b.entries).all(|(x, y)| {
        if x.multiplicity != y.multiplicity {
            return false;
        }
        if x.exact && y.exact {
            x.value == y.value
        } else {
            (x.value - y.value).abs() < tol
        }
    })
}

/// Check that ∂ over the graph is traceless and reconcilable — used by the
/// property tests; cheap smoke test for external callers.
pub fn trace_residual(s: &Spectrum) -> f64 {
    s.entries().iter().map(|e| e.value * e.multiplicity as f64).sum::<f64>()
}
