//! Named join families and their closed-form distance spectra.
//!
//! Every family is a join of disjoint unions of cliques. The factors come in
//! five shapes: `K₅ ∪ K₁` (always joined with a matching-plus-isolated part
//! to form `S(m,n)`), the four `T` factors, and a plain clique `K_r`. For
//! each family the full distance spectrum is known in closed form: a handful
//! of integer eigenvalues in {−1, −2, −3} whose multiplicities are explicit
//! expressions in the parameters, plus the real roots of one quadratic,
//! cubic or quartic with integer coefficients.

use crate::ClassifyError;
use ds_exact::{div_exact, real_roots, IntPoly};
use ds_graph::Graph;
use ds_spectra::Spectrum;

/// A disjoint union of cliques used as a join factor: `T₁ = K₄ ∪ K₁`,
/// `T₂ = K₃ ∪ 2K₁`, `T₃ = K₃ ∪ K₁` and `T₄(m,n) = mK₂ ∪ nK₁` (m + n ≥ 2).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TFactor {
    T1,
    T2,
    T3,
    T4 { m: usize, n: usize },
}

impl TFactor {
    fn validate(self) -> Result<(), ClassifyError> {
        if let TFactor::T4 { m, n } = self {
            if m + n < 2 {
                return Err(ClassifyError::InvalidFamily(format!(
                    "T4({m},{n}) needs m + n >= 2"
                )));
            }
        }
        Ok(())
    }

    /// Clique sizes of the union, in declaration order (larger cliques
    /// first, isolated vertices last).
    pub(crate) fn blocks(self) -> Vec<usize> {
        match self {
            TFactor::T1 => vec![4, 1],
            TFactor::T2 => vec![3, 1, 1],
            TFactor::T3 => vec![3, 1],
            TFactor::T4 { m, n } => {
                let mut blocks = vec![2; m];
                blocks.extend(std::iter::repeat(1).take(n));
                blocks
            }
        }
    }

    fn order(self) -> usize {
        self.blocks().iter().sum()
    }

    /// Sort key that puts the factors in the order their spectrum rows are
    /// tabulated: T₁ < T₂ < T₃ < T₄ with mixed < matching-only < empty.
    fn row_rank(self) -> (u8, u8) {
        match self {
            TFactor::T1 => (0, 0),
            TFactor::T2 => (1, 0),
            TFactor::T3 => (2, 0),
            TFactor::T4 { m, n } => {
                let kind = if m > 0 && n > 0 {
                    0
                } else if m > 0 {
                    1
                } else {
                    2
                };
                (3, kind)
            }
        }
    }
}

impl std::fmt::Display for TFactor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TFactor::T1 => write!(f, "T1"),
            TFactor::T2 => write!(f, "T2"),
            TFactor::T3 => write!(f, "T3"),
            TFactor::T4 { m, n } => write!(f, "T4({m},{n})"),
        }
    }
}

/// A named family instance. `S`, `KrJoin`, `TJoin` and `Friendship` describe
/// connected graphs; a bare `T` factor is the disconnected union itself and
/// exists so the factor graphs can be built and inspected on their own.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// `S(m,n) = (mK₂ ∪ nK₁) ∨ (K₅ ∪ K₁)` with m + n ≥ 1.
    S { m: usize, n: usize },
    /// The bare factor, a disjoint union of cliques.
    T(TFactor),
    /// `K_r ∨ factor` with r ≥ 1.
    KrJoin { r: usize, rhs: TFactor },
    /// `factor ∨ factor`.
    TJoin { lhs: TFactor, rhs: TFactor },
    /// The friendship graph `F_k = K₁ ∨ kK₂`, k ≥ 1. For k ≥ 2 this equals
    /// `KrJoin(1, T4(k,0))`; it is a separate shape because `F₁ = K₃` falls
    /// below `T₄`'s m + n ≥ 2 threshold yet the closed form still applies.
    Friendship { k: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), ClassifyError> {
        match *self {
            FamilySpec::S { m, n } => {
                if m + n < 1 {
                    return Err(ClassifyError::InvalidFamily(
                        "S(m,n) needs m + n >= 1".into(),
                    ));
                }
            }
            FamilySpec::T(f) => f.validate()?,
            FamilySpec::KrJoin { r, rhs } => {
                if r < 1 {
                    return Err(ClassifyError::InvalidFamily("KrJoin needs r >= 1".into()));
                }
                rhs.validate()?;
            }
            FamilySpec::TJoin { lhs, rhs } => {
                lhs.validate()?;
                rhs.validate()?;
            }
            FamilySpec::Friendship { k } => {
                if k < 1 {
                    return Err(ClassifyError::InvalidFamily(
                        "Friendship needs k >= 1".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Number of vertices of the built graph.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::S { m, n } => 2 * m + n + 6,
            FamilySpec::T(f) => f.order(),
            FamilySpec::KrJoin { r, rhs } => r + rhs.order(),
            FamilySpec::TJoin { lhs, rhs } => lhs.order() + rhs.order(),
            FamilySpec::Friendship { k } => 2 * k + 1,
        }
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilySpec::S { m, n } => write!(f, "S({m},{n})"),
            FamilySpec::T(t) => write!(f, "{t}"),
            FamilySpec::KrJoin { r, rhs } => write!(f, "K{r}∨{rhs}"),
            FamilySpec::TJoin { lhs, rhs } => write!(f, "{lhs}∨{rhs}"),
            FamilySpec::Friendship { k } => write!(f, "F_{k}"),
        }
    }
}

/// The disjoint union `K_{s₁} ∪ K_{s₂} ∪ …` with blocks laid out in order.
fn union_of_cliques(sizes: &[usize]) -> Result<Graph, ClassifyError> {
    assert!(!sizes.is_empty(), "a factor needs at least one block");
    let mut g = Graph::complete(sizes[0])?;
    for &s in &sizes[1..] {
        g = g.disjoint_union(&Graph::complete(s)?)?;
    }
    Ok(g)
}

/// Builds the graph a [`FamilySpec`] names. Vertices are laid out join
/// factor by join factor, left to right, and within each factor block by
/// block in declaration order; so `S(m,n)` starts with the m matching edges,
/// then the n isolated-side vertices, then K₅, then the last vertex.
pub fn build_family(spec: &FamilySpec) -> Result<Graph, ClassifyError> {
    spec.validate()?;
    let g = match *spec {
        FamilySpec::S { m, n } => {
            let mut blocks = vec![2; m];
            blocks.extend(std::iter::repeat(1).take(n));
            let left = union_of_cliques(&blocks)?;
            left.join(&union_of_cliques(&[5, 1])?)?
        }
        FamilySpec::T(f) => union_of_cliques(&f.blocks())?,
        FamilySpec::KrJoin { r, rhs } => {
            Graph::complete(r)?.join(&union_of_cliques(&rhs.blocks())?)?
        }
        FamilySpec::TJoin { lhs, rhs } => {
            union_of_cliques(&lhs.blocks())?.join(&union_of_cliques(&rhs.blocks())?)?
        }
        FamilySpec::Friendship { k } => {
            Graph::complete(1)?.join(&union_of_cliques(&vec![2; k])?)?
        }
    };
    Ok(g)
}

/// A distance spectrum in closed form: integer eigenvalues with explicit
/// multiplicities plus the real roots of `poly`. The two parts may overlap —
/// at degenerate parameters `poly` can itself have a root at −1, −2 or −3,
/// which then simply adds to that value's multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormSpectrum {
    order: usize,
    fixed: Vec<(i64, usize)>,
    poly: IntPoly,
}

impl ClosedFormSpectrum {
    fn new(order: usize, fixed: Vec<(i64, usize)>, poly: IntPoly) -> Self {
        let fixed: Vec<(i64, usize)> = fixed.into_iter().filter(|&(_, k)| k > 0).collect();
        let total: usize = fixed.iter().map(|&(_, k)| k).sum();
        let degree = poly.degree().expect("nonzero spectrum polynomial");
        assert_eq!(degree + total, order, "closed form must carry order eigenvalues");
        ClosedFormSpectrum { order, fixed, poly }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The pinned integer eigenvalues as (value, multiplicity) pairs, in
    /// descending value order; zero multiplicities are dropped.
    pub fn fixed(&self) -> &[(i64, usize)] {
        &self.fixed
    }

    /// The polynomial carrying the remaining eigenvalues (monic).
    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    /// Total multiplicity of an integer eigenvalue: its pinned multiplicity
    /// plus however often it occurs as a root of `poly` (computed exactly by
    /// repeated division by x − value).
    pub fn exact_multiplicity(&self, value: i64) -> usize {
        let pinned = self
            .fixed
            .iter()
            .find(|&&(v, _)| v == value)
            .map_or(0, |&(_, k)| k);
        let linear = IntPoly::from_i64(&[-value, 1]);
        let mut p = self.poly.clone();
        let mut k = 0;
        while let Some(q) = div_exact(&p, &linear) {
            p = q;
            k += 1;
            if p.is_zero() {
                break;
            }
        }
        pinned + k
    }

    /// All eigenvalues expanded to a flat descending list: the pinned values
    /// plus the real roots of `poly` isolated to `eps`. The length equals
    /// `order()` because these polynomials split over the reals.
    pub fn expanded(&self, eps: f64) -> Result<Vec<f64>, ClassifyError> {
        let mut values = Vec::with_capacity(self.order);
        for &(v, k) in &self.fixed {
            values.extend(std::iter::repeat(v as f64).take(k));
        }
        for (root, mult) in real_roots(&self.poly, eps)? {
            values.extend(std::iter::repeat(root).take(mult));
        }
        values.sort_by(|a, b| b.total_cmp(a));
        Ok(values)
    }

    /// Does a computed spectrum agree with this closed form? Exact
    /// multiplicities of −1, −2, −3 must match on the nose; the full
    /// eigenvalue lists must agree positionwise within `tol`.
    pub fn matches(&self, spectrum: &Spectrum, tol: f64) -> Result<bool, ClassifyError> {
        if spectrum.order() != self.order {
            return Ok(false);
        }
        for value in [-1, -2, -3] {
            if spectrum.exact_multiplicity(value) != self.exact_multiplicity(value) {
                return Ok(false);
            }
        }
        let want = self.expanded(1e-12)?;
        let got = spectrum.expanded();
        Ok(want.len() == got.len()
            && want.iter().zip(&got).all(|(a, b)| (a - b).abs() <= tol))
    }
}

fn quadratic(b: i64, c: i64) -> IntPoly {
    IntPoly::from_i64(&[c, b, 1])
}

fn cubic(b: i64, c: i64, d: i64) -> IntPoly {
    IntPoly::from_i64(&[d, c, b, 1])
}

fn quartic(b: i64, c: i64, d: i64, e: i64) -> IntPoly {
    IntPoly::from_i64(&[e, d, c, b, 1])
}

fn mult(k: i64) -> usize {
    debug_assert!(k >= 0, "negative multiplicity expression");
    k as usize
}

/// Spectrum row of `S(m,n)`; covers the all-parameter, n = 0 and m = 0 shapes.
fn s_row(m: i64, n: i64) -> (Vec<(i64, usize)>, IntPoly) {
    if m >= 1 && n >= 1 {
        (
            vec![(-1, mult(m + 4)), (-2, mult(n - 1)), (-3, mult(m))],
            cubic(-(2 * n + 4 * m + 2), 2 * n + 8 * m - 28, 32 * m + 24 * n - 40),
        )
    } else if n == 0 {
        (
            vec![(-1, mult(m + 4)), (-3, mult(m))],
            quadratic(-(4 * m + 4), 16 * m - 20),
        )
    } else {
        (
            vec![(-1, 4), (-2, mult(n - 1))],
            cubic(-(2 * n + 2), 2 * n - 28, 24 * n - 40),
        )
    }
}

/// Spectrum row of `K_r ∨ rhs`. Also serves `Friendship(k)` as r = 1,
/// rhs = T₄(k,0); the formulas remain valid at k = 1 (F₁ = K₃).
fn kr_row(r: i64, rhs: TFactor) -> (Vec<(i64, usize)>, IntPoly) {
    match rhs {
        TFactor::T1 => (
            vec![(-1, mult(r + 2))],
            cubic(-(r + 2), -(2 * r + 19), 3 * r - 16),
        ),
        TFactor::T2 => (
            vec![(-1, mult(r + 1)), (-2, 1)],
            cubic(-(r + 3), -(r + 24), 6 * r - 20),
        ),
        TFactor::T3 => (
            vec![(-1, mult(r + 1))],
            cubic(-(r + 1), -(2 * r + 14), 2 * r - 12),
        ),
        TFactor::T4 { m, n } => {
            let (m, n) = (m as i64, n as i64);
            if m >= 1 && n >= 1 {
                (
                    vec![(-1, mult(m + r - 1)), (-2, mult(n - 1)), (-3, mult(m - 1))],
                    cubic(
                        6 - 2 * n - 4 * m - r,
                        2 * m * r - 8 * n - 5 * r - 12 * m + n * r + 11,
                        -(8 * m + 6 * n + 6 * r - 4 * m * r - 3 * n * r - 6),
                    ),
                )
            } else if n == 0 {
                (
                    vec![(-1, mult(m + r - 1)), (-3, mult(m - 1))],
                    quadratic(4 - r - 4 * m, 2 * m * r - 4 * m - 3 * r + 3),
                )
            } else {
                (
                    vec![(-1, mult(r - 1)), (-2, mult(n - 1))],
                    quadratic(3 - r - 2 * n, n * r - 2 * n - 2 * r + 2),
                )
            }
        }
    }
}

/// Spectrum row of `T_i ∨ T_j` for i, j ≤ 3: six constant rows.
fn t_small_row(a: TFactor, b: TFactor) -> (Vec<(i64, usize)>, IntPoly) {
    use TFactor::{T1, T2, T3};
    match (a, b) {
        (T1, T1) => (vec![(-1, 6)], quartic(-6, -48, -34, 87)),
        (T1, T2) => (vec![(-1, 5), (-2, 1)], quartic(-7, -49, -11, 138)),
        (T1, T3) => (vec![(-1, 5)], quartic(-5, -42, -34, 62)),
        (T2, T2) => (vec![(-1, 4), (-2, 2)], quartic(-8, -49, 20, 204)),
        (T2, T3) => (vec![(-1, 4), (-2, 1)], quartic(-6, -44, -18, 100)),
        (T3, T3) => (vec![(-1, 4)], quartic(-4, -36, -32, 44)),
        _ => unreachable!("callers normalise the factor order"),
    }
}

/// Spectrum row of `T_i ∨ T₄(m,n)` for i ≤ 3.
fn t_vs_t4_row(a: TFactor, m: i64, n: i64) -> (Vec<(i64, usize)>, IntPoly) {
    match a {
        TFactor::T1 => {
            if m >= 1 && n >= 1 {
                (
                    vec![(-1, mult(m + 3)), (-2, mult(n - 1)), (-3, mult(m - 1))],
                    quartic(
                        2 - 2 * n - 4 * m,
                        -(6 * m + 5 * n + 25),
                        42 * m + 22 * n - 98,
                        76 * m + 57 * n - 96,
                    ),
                )
            } else if n == 0 {
                (
                    vec![(-1, mult(m + 3)), (-3, mult(m - 1))],
                    cubic(-4 * m, 2 * m - 25, 38 * m - 48),
                )
            } else {
                (
                    vec![(-1, 3), (-2, mult(n - 1))],
                    cubic(-(2 * n + 1), n - 22, 19 * n - 32),
                )
            }
        }
        TFactor::T2 => {
            if m >= 1 && n >= 1 {
                (
                    vec![(-1, mult(m + 2)), (-2, mult(n)), (-3, mult(m - 1))],
                    quartic(
                        1 - 2 * n - 4 * m,
                        -(2 * m + 3 * n + 34),
                        64 * m + 35 * n - 124,
                        104 * m + 78 * n - 120,
                    ),
                )
            } else if n == 0 {
                (
                    vec![(-1, mult(m + 2)), (-2, 1), (-3, mult(m - 1))],
                    cubic(-(4 * m + 1), 6 * m - 32, 52 * m - 60),
                )
            } else {
                (
                    vec![(-1, 2), (-2, mult(n))],
                    cubic(-(2 * n + 2), 3 * n - 28, 26 * n - 40),
                )
            }
        }
        TFactor::T3 => {
            if m >= 1 && n >= 1 {
                (
                    vec![(-1, mult(m + 2)), (-2, mult(n - 1)), (-3, mult(m - 1))],
                    quartic(
                        3 - 2 * n - 4 * m,
                        -(8 * m + 6 * n + 16),
                        28 * m + 14 * n - 72,
                        56 * m + 42 * n - 72,
                    ),
                )
            } else if n == 0 {
                (
                    vec![(-1, mult(m + 2)), (-3, mult(m - 1))],
                    cubic(-(4 * m - 1), -18, 28 * m - 36),
                )
            } else {
                (
                    vec![(-1, 2), (-2, mult(n - 1))],
                    cubic(-2 * n, -16, 14 * n - 24),
                )
            }
        }
        TFactor::T4 { .. } => unreachable!("callers normalise the factor order"),
    }
}

/// Spectrum row of `T₄(m₁,n₁) ∨ T₄(m₂,n₂)`, six shapes by which of the four
/// parameters vanish. Callers normalise so the mixed factor comes first.
fn t4_vs_t4_row(m1: i64, n1: i64, m2: i64, n2: i64) -> (Vec<(i64, usize)>, IntPoly) {
    let s = m1 + m2;
    let t = n1 + n2;
    let w = m1 * n2 + m2 * n1;
    if m1 >= 1 && n1 >= 1 && m2 >= 1 && n2 >= 1 {
        (
            vec![(-1, mult(s)), (-2, mult(t - 2)), (-3, mult(s - 2))],
            quartic(
                10 - 4 * s - 2 * t,
                12 * m1 * m2 + 6 * w - 28 * s + 3 * n1 * n2 - 16 * t + 37,
                48 * m1 * m2 + 30 * w - 64 * s + 18 * n1 * n2 - 42 * t + 60,
                48 * m1 * m2 + 36 * w - 48 * s + 27 * n1 * n2 - 36 * t + 36,
            ),
        )
    } else if m1 >= 1 && n1 >= 1 && n2 == 0 {
        (
            vec![(-1, mult(s)), (-2, mult(n1 - 1)), (-3, mult(s - 2))],
            cubic(
                8 - 4 * s - 2 * n1,
                12 * m1 * m2 - 20 * s - 12 * n1 + 6 * m2 * n1 + 21,
                24 * m1 * m2 + 18 * m2 * n1 - 24 * s - 18 * n1 + 18,
            ),
        )
    } else if m1 >= 1 && n1 >= 1 && m2 == 0 {
        (
            vec![(-1, mult(m1)), (-2, mult(t - 2)), (-3, mult(m1 - 1))],
            cubic(
                7 - 2 * t - 4 * m1,
                6 * m1 * n2 - 10 * t - 16 * m1 + 3 * n1 * n2 + 16,
                12 * m1 * n2 + 9 * n1 * n2 - 12 * t - 16 * m1 + 12,
            ),
        )
    } else if n1 == 0 && n2 == 0 {
        (
            vec![(-1, mult(s)), (-3, mult(s - 2))],
            quadratic(6 - 4 * s, 12 * m1 * m2 - 12 * s + 9),
        )
    } else if n1 == 0 && m2 == 0 {
        (
            vec![(-1, mult(m1)), (-2, mult(n2 - 1)), (-3, mult(m1 - 1))],
            quadratic(5 - 4 * m1 - 2 * n2, 6 * m1 * n2 - 8 * m1 - 6 * n2 + 6),
        )
    } else {
        (
            vec![(-2, mult(t - 2))],
            quadratic(4 - 2 * t, 3 * n1 * n2 - 4 * t + 4),
        )
    }
}

/// The closed-form distance spectrum of a family instance.
///
/// A bare `T` factor is disconnected and has no distance spectrum, which is
/// reported as an error; every connected shape is covered. Joining is
/// commutative, so `TJoin` rows are looked up with the factors in a
/// canonical order.
pub fn expected_spectrum(spec: &FamilySpec) -> Result<ClosedFormSpectrum, ClassifyError> {
    spec.validate()?;
    let (fixed, poly) = match *spec {
        FamilySpec::S { m, n } => s_row(m as i64, n as i64),
        FamilySpec::T(_) => {
            return Err(ClassifyError::DisconnectedFamily(spec.to_string()));
        }
        FamilySpec::KrJoin { r, rhs } => kr_row(r as i64, rhs),
        FamilySpec::Friendship { k } => kr_row(1, TFactor::T4 { m: k, n: 0 }),
        FamilySpec::TJoin { lhs, rhs } => {
            let (a, b) = if lhs.row_rank() <= rhs.row_rank() {
                (lhs, rhs)
            } else {
                (rhs, lhs)
            };
            match (a, b) {
                (TFactor::T4 { m: m1, n: n1 }, TFactor::T4 { m: m2, n: n2 }) => {
                    t4_vs_t4_row(m1 as i64, n1 as i64, m2 as i64, n2 as i64)
                }
                (_, TFactor::T4 { m, n }) => t_vs_t4_row(a, m as i64, n as i64),
                _ => t_small_row(a, b),
            }
        }
    };
    Ok(ClosedFormSpectrum::new(spec.order(), fixed, poly))
}
