//! Acceptance gate: one test per verification criterion. Every test prints
//! a single pass/fail line (visible with `--nocapture`); on failure it also
//! prints each witness before panicking.

use ds_classify::{
    build_family, expected_spectrum, forbidden_pattern, multiplicity_certificates,
    FamilySpec, PatternName, TFactor,
};
use ds_exact::{char_poly, inertia_shifted, rank, real_roots, IntMatrix, IntPoly};
use ds_graph::{Graph, GraphError};
use ds_harness::{
    campaign_appendix_a, campaign_dds, campaign_partitions, campaign_theorem_3_14,
    campaign_theorem_4_2, enumerate_connected_classes, AppendixGrid, CampaignOptions,
    GraphSource, VerificationReport,
};
use ds_spectra::{distance_spectrum, eigenvalues_sym, interlacing_check, SpectraError};
use std::collections::BTreeMap;
use std::path::PathBuf;

/// ±0.005 for values the source prints with two decimals.
const TOL2: f64 = 0.005;
/// ±0.05 for values printed with one decimal.
const TOL1: f64 = 0.05;
/// Sentinel for integer eigenvalues: compared at float precision and their
/// multiplicity certified by integer rank.
const EXACT: f64 = 0.0;

fn gate(criterion: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("{criterion}: PASS");
    } else {
        println!("{criterion}: FAIL ({} problems)", failures.len());
        for f in &failures {
            println!("  {f}");
        }
        panic!("{criterion} failed");
    }
}

fn expanded(g: &Graph) -> Vec<f64> {
    distance_spectrum(g).unwrap().expanded()
}

fn exact_mult(g: &Graph, v: i64) -> usize {
    let d = g.distance_matrix().unwrap();
    g.n() - rank(&IntMatrix::from_distance_shifted(&d, -v))
}

fn collect_failures(tag: &str, r: &VerificationReport, out: &mut Vec<String>) {
    for f in &r.failures {
        out.push(format!("{tag}: {} — {}", f.graph6, f.detail));
    }
}

fn opts(dedup: bool) -> CampaignOptions {
    CampaignOptions { jobs: 1, dedup }
}

fn catalog_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/connected-8.g6")
}

/// Compare a computed spectrum against a printed row: positionwise at each
/// entry's tolerance, plus an exact rank-certified multiplicity for every
/// integer entry.
fn check_row(name: &str, g: &Graph, row: &[(f64, usize, f64)], bad: &mut Vec<String>) {
    let got = expanded(g);
    let want: Vec<(f64, f64)> = row
        .iter()
        .flat_map(|&(v, m, tol)| std::iter::repeat((v, tol)).take(m))
        .collect();
    if got.len() != want.len() {
        bad.push(format!("{name}: order {} but row lists {} entries", got.len(), want.len()));
        return;
    }
    for (i, (&g_i, &(w, tol))) in got.iter().zip(&want).enumerate() {
        let t = if tol == EXACT { 1e-8 } else { tol };
        if (g_i - w).abs() > t {
            bad.push(format!("{name}: entry {} is {:.4}, printed value {}", i + 1, g_i, w));
        }
    }
    for &(v, m, tol) in row {
        if tol == EXACT {
            let em = exact_mult(g, v as i64);
            if em != m {
                bad.push(format!("{name}: eigenvalue {v} has exact multiplicity {em}, not {m}"));
            }
        }
    }
}

fn tj(lhs: TFactor, rhs: TFactor) -> Graph {
    build_family(&FamilySpec::TJoin { lhs, rhs }).unwrap()
}

#[test]
fn criterion_1_golden_spectra() {
    let mut bad = Vec::new();

    // P3, the order-3 base case: [2.73, −0.73, −2].
    let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    check_row("P3", &p3, &[(2.73, 1, TOL2), (-0.73, 1, TOL2), (-2.0, 1, EXACT)], &mut bad);

    // K1 ∨ (K6 ∪ K1): [8.78, −0.70, (−1)⁵, −3.07] with multiplicity 5 of −1
    // certified exactly. The same graph appears in the pattern catalog as I1.
    let i1 = forbidden_pattern(PatternName::I1).unwrap();
    check_row(
        "K1∨(K6∪K1)",
        &i1,
        &[(8.78, 1, TOL2), (-0.70, 1, TOL2), (-1.0, 5, EXACT), (-3.07, 1, TOL2)],
        &mut bad,
    );

    // The twelve extremal eigenvalues of the pattern catalog, each at the
    // precision it is printed with. P4's listed value −3.14 is a typo for
    // −2−√2 ≈ −3.4142: the exact inertia computation below certifies that
    // exactly one distance eigenvalue lies below −3, and −3.14 is not a
    // root of its characteristic polynomial.
    let extremals: [(PatternName, usize, f64, f64); 12] = [
        (PatternName::P4, 3, -3.4142, TOL2),
        (PatternName::C5, 2, -0.38, TOL2),
        (PatternName::H0, 2, -0.91, TOL2),
        (PatternName::H1, 2, -0.72, TOL2),
        (PatternName::H2, 2, -0.7, TOL1),
        (PatternName::H3, 2, -0.77, TOL2),
        (PatternName::H4, 2, -0.83, TOL2),
        (PatternName::H5, 5, -3.43, TOL2),
        (PatternName::I1, 7, -3.07, TOL2),
        (PatternName::I2, 6, -3.21, TOL2),
        (PatternName::I3, 8, -3.03, TOL2),
        (PatternName::I4, 6, -3.1, TOL1),
    ];
    for (name, idx, want, tol) in extremals {
        let got = expanded(&forbidden_pattern(name).unwrap())[idx];
        if (got - want).abs() > tol {
            bad.push(format!("{name}: extremal eigenvalue {got:.4}, recorded value {want}"));
        }
    }
    let p4_dist = forbidden_pattern(PatternName::P4).unwrap().distance_matrix().unwrap();
    if inertia_shifted(&p4_dist, 3).n_neg != 1 {
        bad.push("P4: expected exactly one distance eigenvalue below -3".into());
    }

    // The eight constant rows of the closed-form table.
    let s01 = build_family(&FamilySpec::S { m: 0, n: 1 }).unwrap();
    check_row(
        "S(0,1)",
        &s01,
        &[(7.66, 1, TOL2), (-0.71, 1, TOL2), (-1.0, 4, EXACT), (-2.96, 1, TOL2)],
        &mut bad,
    );
    let s10 = build_family(&FamilySpec::S { m: 1, n: 0 }).unwrap();
    check_row(
        "S(1,0)",
        &s10,
        &[(8.47, 1, TOL2), (-0.47, 1, TOL2), (-1.0, 5, EXACT), (-3.0, 1, EXACT)],
        &mut bad,
    );
    check_row(
        "T1∨T1",
        &tj(TFactor::T1, TFactor::T1),
        &[(10.71, 1, TOL2), (1.0, 1, EXACT), (-1.0, 6, EXACT), (-2.71, 1, TOL2), (-3.0, 1, EXACT)],
        &mut bad,
    );
    check_row(
        "T1∨T2",
        &tj(TFactor::T1, TFactor::T2),
        &[
            (11.32, 1, TOL2),
            (1.46, 1, TOL2),
            (-1.0, 5, EXACT),
            (-2.0, 1, EXACT),
            (-2.78, 1, TOL2),
            (-3.0, 1, EXACT),
        ],
        &mut bad,
    );
    check_row(
        "T1∨T3",
        &tj(TFactor::T1, TFactor::T3),
        &[(9.65, 1, TOL2), (0.85, 1, TOL2), (-1.0, 5, EXACT), (-2.6, 1, TOL1), (-2.9, 1, TOL1)],
        &mut bad,
    );
    check_row(
        "T2∨T2",
        &tj(TFactor::T2, TFactor::T2),
        &[
            (11.87, 1, TOL2),
            (2.0, 1, EXACT),
            (-1.0, 4, EXACT),
            (-2.0, 2, EXACT),
            (-2.87, 1, TOL2),
            (-3.0, 1, EXACT),
        ],
        &mut bad,
    );
    check_row(
        "T2∨T3",
        &tj(TFactor::T2, TFactor::T3),
        &[
            (10.34, 1, TOL2),
            (1.25, 1, TOL2),
            (-1.0, 4, EXACT),
            (-2.0, 1, EXACT),
            (-2.63, 1, TOL2),
            (-2.95, 1, TOL2),
        ],
        &mut bad,
    );
    check_row(
        "T3∨T3",
        &tj(TFactor::T3, TFactor::T3),
        &[(8.57, 1, TOL2), (0.73, 1, TOL2), (-1.0, 4, EXACT), (-2.57, 1, TOL2), (-2.73, 1, TOL2)],
        &mut bad,
    );

    gate("criterion 1 (golden reference spectra)", bad);
}

#[test]
fn criterion_2_closed_form_rows_on_the_grid() {
    let mut bad = Vec::new();
    let report = campaign_appendix_a(&AppendixGrid { r_max: 4, mn_max: 5 }, &opts(false)).unwrap();
    collect_failures("appendixA", &report, &mut bad);
    // 845 row instances plus 31 radical-formula items.
    if report.total != 876 {
        bad.push(format!("expected 876 grid items, ran {}", report.total));
    }
    if report.elapsed_ms >= 60_000 {
        bad.push(format!("grid sweep took {} ms, budget is one minute", report.elapsed_ms));
    }
    gate("criterion 2 (closed-form spectra across the parameter grid)", bad);
}

#[test]
fn criterion_3_deciders_agree_exhaustively() {
    let mut bad = Vec::new();
    let mut elapsed = 0;
    // Connected non-complete classes of each order: 6−1, 21−1, 112−1, 853−1.
    for (n, expect) in [(4, 5), (5, 20), (6, 111), (7, 852)] {
        let report =
            campaign_theorem_3_14(&GraphSource::Internal { n }, &opts(true)).unwrap();
        collect_failures(&format!("n={n}"), &report, &mut bad);
        if report.total != expect {
            bad.push(format!("n={n}: expected {expect} eligible classes, checked {}", report.total));
        }
        elapsed += report.elapsed_ms;
    }
    if elapsed >= 60_000 {
        bad.push(format!("sweep took {elapsed} ms, budget is one minute deduplicated"));
    }
    gate("criterion 3 (structural ≡ spectral decider, all orders 4–7)", bad);
}

#[test]
fn criterion_4_two_eigenvalue_shapes_exhaustively() {
    let mut bad = Vec::new();
    let mut elapsed = 0;
    // All connected classes: 1, 1, 2, 6, 21, 112, 853.
    for (n, expect) in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112), (7, 853)] {
        let report = campaign_theorem_4_2(&GraphSource::Internal { n }, &opts(true)).unwrap();
        collect_failures(&format!("n={n}"), &report, &mut bad);
        if report.total != expect {
            bad.push(format!("n={n}: expected {expect} classes, checked {}", report.total));
        }
        elapsed += report.elapsed_ms;
    }
    if elapsed >= 60_000 {
        bad.push(format!("sweep took {elapsed} ms, budget is one minute deduplicated"));
    }
    gate("criterion 4 (exactly-two-exceptional-eigenvalues ⇔ the three shapes, orders ≤ 7)", bad);
}

/// The total characteristic polynomial a closed-form spectrum describes:
/// f(x) times (x − v)^m for each fixed eigenvalue.
fn total_char_poly(spec: &FamilySpec) -> IntPoly {
    let closed = expected_spectrum(spec).unwrap();
    let mut p = closed.poly().clone();
    for &(v, m) in closed.fixed() {
        let linear = IntPoly::from_i64(&[-v, 1]);
        for _ in 0..m {
            p = &p * &linear;
        }
    }
    p
}

#[test]
fn criterion_5_distance_spectrum_determination() {
    let mut bad = Vec::new();

    // Friendship graphs F2 and F3 against every connected graph of their
    // order; the two-eigenvalue shapes K2∨2K2 and 2K2∨2K2 likewise, the
    // latter against the bundled catalog of all 11117 connected classes on
    // eight vertices.
    let cases: [(FamilySpec, GraphSource, bool, usize); 4] = [
        (
            FamilySpec::Friendship { k: 2 },
            GraphSource::Internal { n: 5 },
            false,
            728,
        ),
        (
            FamilySpec::Friendship { k: 3 },
            GraphSource::Internal { n: 7 },
            true,
            853,
        ),
        (
            FamilySpec::KrJoin { r: 2, rhs: TFactor::T4 { m: 2, n: 0 } },
            GraphSource::Internal { n: 6 },
            true,
            112,
        ),
        (
            FamilySpec::TJoin { lhs: TFactor::T4 { m: 2, n: 0 }, rhs: TFactor::T4 { m: 2, n: 0 } },
            GraphSource::File { path: catalog_path(), skip_bad: false },
            false,
            11117,
        ),
    ];
    for (spec, universe, dedup, expect) in cases {
        let target = GraphSource::Family { spec };
        let report = campaign_dds(&target, &universe, &opts(dedup)).unwrap();
        collect_failures(&format!("{spec}"), &report, &mut bad);
        if report.total != expect {
            bad.push(format!("{spec}: expected {expect} universe graphs, checked {}", report.total));
        }
    }

    // Unbounded parameters are out of reach by enumeration; instead the
    // pairwise-collision analysis is replayed symbolically: across every
    // two-exceptional-eigenvalue family instance of order ≤ 40, no two
    // distinct instances share a total characteristic polynomial.
    let mut specs: Vec<FamilySpec> = Vec::new();
    for m in 1.. {
        if 2 * m + 6 > 40 {
            break;
        }
        specs.push(FamilySpec::S { m, n: 0 });
    }
    for m in 2.. {
        if 2 * m + 1 > 40 {
            break;
        }
        for r in 1..=(40 - 2 * m) {
            specs.push(FamilySpec::KrJoin { r, rhs: TFactor::T4 { m, n: 0 } });
        }
    }
    for m1 in 2.. {
        if 4 * m1 > 40 {
            break;
        }
        for m2 in m1..=(20 - m1) {
            specs.push(FamilySpec::TJoin {
                lhs: TFactor::T4 { m: m1, n: 0 },
                rhs: TFactor::T4 { m: m2, n: 0 },
            });
        }
    }
    if specs.len() != 440 {
        bad.push(format!("expected 440 family instances of order ≤ 40, built {}", specs.len()));
    }
    let mut by_order: BTreeMap<usize, Vec<(String, IntPoly)>> = BTreeMap::new();
    for spec in &specs {
        by_order
            .entry(spec.order())
            .or_default()
            .push((spec.to_string(), total_char_poly(spec)));
    }
    for (order, group) in &by_order {
        for (i, (name_a, poly_a)) in group.iter().enumerate() {
            for (name_b, poly_b) in &group[i + 1..] {
                if poly_a == poly_b {
                    bad.push(format!("order {order}: {name_a} and {name_b} are cospectral"));
                }
            }
        }
    }

    gate("criterion 5 (no cospectral mates at desk scale; no symbolic collisions to order 40)", bad);
}

#[test]
fn criterion_6_partition_machinery_exhaustively() {
    let mut bad = Vec::new();
    let mut elapsed = 0;
    // The full labeled space of connected graphs, orders 1 through 6.
    for (n, expect) in [(1, 1), (2, 1), (3, 4), (4, 38), (5, 728), (6, 26704)] {
        let report = campaign_partitions(&GraphSource::Internal { n }, &opts(false)).unwrap();
        collect_failures(&format!("n={n}"), &report, &mut bad);
        if report.total != expect {
            bad.push(format!("n={n}: expected {expect} labeled graphs, checked {}", report.total));
        }
        elapsed += report.elapsed_ms;
    }
    if elapsed >= 120_000 {
        bad.push(format!("sweep took {elapsed} ms, budget is two minutes"));
    }
    gate("criterion 6 (equitable partitions, divisor matrices: exhaustive to order 6)", bad);
}

/// The criterion-2 parameter grid, rebuilt for certificate sweeps.
fn family_grid(r_max: usize, mn_max: usize) -> Vec<FamilySpec> {
    let mut factors = vec![TFactor::T1, TFactor::T2, TFactor::T3];
    for m in 0..=mn_max {
        for n in 0..=mn_max {
            if m + n >= 2 {
                factors.push(TFactor::T4 { m, n });
            }
        }
    }
    let mut specs = Vec::new();
    for m in 0..=mn_max {
        for n in 0..=mn_max {
            if m + n >= 1 {
                specs.push(FamilySpec::S { m, n });
            }
        }
    }
    for r in 1..=r_max {
        for &rhs in &factors {
            specs.push(FamilySpec::KrJoin { r, rhs });
        }
    }
    for (i, &lhs) in factors.iter().enumerate() {
        for &rhs in &factors[i..] {
            specs.push(FamilySpec::TJoin { lhs, rhs });
        }
    }
    specs
}

fn check_certificates(tag: &str, g: &Graph, bad: &mut Vec<String>) {
    let d = g.distance_matrix().unwrap();
    let n = g.n();
    for cert in multiplicity_certificates(g).unwrap() {
        for x in &cert.witnesses {
            if x.iter().all(|&c| c == 0) {
                bad.push(format!("{tag}: zero witness vector for eigenvalue {}", cert.eigenvalue));
                continue;
            }
            for i in 0..n {
                let lhs: i64 = (0..n).map(|j| d.get(i, j) as i64 * x[j]).sum();
                if lhs != cert.eigenvalue * x[i] {
                    bad.push(format!(
                        "{tag}: witness for eigenvalue {} fails D·x = λx at row {i}",
                        cert.eigenvalue
                    ));
                    break;
                }
            }
        }
        let exact = exact_mult(g, cert.eigenvalue);
        if cert.lower_bound > exact {
            bad.push(format!(
                "{tag}: certificate claims multiplicity ≥ {} for {}, exact is {exact}",
                cert.lower_bound, cert.eigenvalue
            ));
        }
    }
}

#[test]
fn criterion_7_certificate_soundness() {
    let mut bad = Vec::new();
    for n in 2..=6 {
        for g in enumerate_connected_classes(n).unwrap() {
            check_certificates(&format!("n={n} class"), &g, &mut bad);
        }
    }
    for spec in family_grid(4, 5) {
        let g = build_family(&spec).unwrap();
        check_certificates(&spec.to_string(), &g, &mut bad);
    }
    gate("criterion 7 (eigenvalue-multiplicity certificates replay exactly)", bad);
}

#[test]
fn criterion_8_interlacing() {
    let mut bad = Vec::new();
    let mut checked = 0usize;
    for n in 2..=6 {
        for g in enumerate_connected_classes(n).unwrap() {
            for mask in 1u32..(1 << n) - 1 {
                let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                match interlacing_check(&g, &s) {
                    Ok(true) => checked += 1,
                    Ok(false) => bad.push(format!(
                        "order {n}, subset {s:?}: interlacing violated",
                    )),
                    // Interlacing applies to connected induced subgraphs of
                    // hosts with diameter below three; anything else is out
                    // of scope by construction, not a failure.
                    Err(SpectraError::DiameterTooLarge(_)) => {}
                    Err(SpectraError::Graph(GraphError::Disconnected)) => {}
                    Err(e) => bad.push(format!("order {n}, subset {s:?}: {e}")),
                }
            }
        }
    }
    // 4813 pairs are eligible across orders 2–6; a much smaller count would
    // mean the eligibility filter broke, not that interlacing got lucky.
    if checked < 1000 {
        bad.push(format!("only {checked} eligible host/subgraph pairs; sweep looks truncated"));
    }
    gate("criterion 8 (distance eigenvalue interlacing on every eligible induced subgraph)", bad);
}

#[test]
fn criterion_9_jacobi_vs_exact_roots() {
    let mut bad = Vec::new();
    for n in 1..=6 {
        for g in enumerate_connected_classes(n).unwrap() {
            let d = g.distance_matrix().unwrap();
            let rows: Vec<Vec<f64>> =
                (0..n).map(|i| (0..n).map(|j| d.get(i, j) as f64).collect()).collect();
            let jac = eigenvalues_sym(&rows).unwrap();
            let cp = char_poly(&IntMatrix::from_distance_shifted(&d, 0));
            let isolated = real_roots(&cp, 1e-12).unwrap();
            let exact: Vec<f64> = isolated
                .iter()
                .flat_map(|&(v, m)| std::iter::repeat(v).take(m))
                .collect();
            if jac.len() != exact.len() {
                bad.push(format!(
                    "{}: Jacobi found {} eigenvalues, Sturm isolation {}",
                    ds_graph::to_graph6(&g),
                    jac.len(),
                    exact.len()
                ));
                continue;
            }
            for (a, b) in jac.iter().zip(&exact) {
                if (a - b).abs() > 1e-8 {
                    bad.push(format!(
                        "{}: Jacobi {a:.12} vs exact {b:.12}",
                        ds_graph::to_graph6(&g)
                    ));
                }
            }
        }
    }
    gate("criterion 9 (floating eigenvalues agree with certified exact roots)", bad);
}
