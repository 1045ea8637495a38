//! Exhaustive cross-checks between the structural and spectral deciders on
//! small orders, plus a medium-sized grid of closed-form spectra.
//!
//! The classification theorem says a connected graph has ∂₃ ≤ −1 and
//! ∂ₙ ≥ −3 exactly when it is one of the catalogued joins; these sweeps
//! verify the equivalence over every connected labeled graph up to order
//! six and check that every rejection is explained by a forbidden pattern.

use ds_classify::{
    build_family, classify_spectral, classify_structural, contains_induced, expected_spectrum,
    is_h_member, is_p4_free, multiplicity_certificates, pattern_catalog, FamilySpec, TFactor,
    Witness,
};
use ds_exact::{rank, IntMatrix};
use ds_graph::{to_graph6, Graph};
use ds_spectra::distance_spectrum;

fn connected_labeled(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Equal-order isomorphism: an induced embedding that uses every vertex is
/// an isomorphism once the edge counts agree.
fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && contains_induced(a, b).is_some()
}

fn exact_multiplicity(g: &Graph, lambda: i64) -> usize {
    let d = g.distance_matrix().unwrap();
    d.n() - rank(&IntMatrix::from_distance_shifted(&d, -lambda))
}

/// Every family spec with all parameters at most three.
fn small_parameter_grid() -> Vec<FamilySpec> {
    let mut t_factors = vec![TFactor::T1, TFactor::T2, TFactor::T3];
    for m in 0..=3 {
        for n in 0..=3 {
            if m + n >= 2 {
                t_factors.push(TFactor::T4 { m, n });
            }
        }
    }
    let mut specs = Vec::new();
    for m in 0..=3 {
        for n in 0..=3 {
            if m + n >= 1 {
                specs.push(FamilySpec::S { m, n });
            }
        }
    }
    for r in 1..=3 {
        for &rhs in &t_factors {
            specs.push(FamilySpec::KrJoin { r, rhs });
        }
    }
    for &lhs in &t_factors {
        for &rhs in &t_factors {
            specs.push(FamilySpec::TJoin { lhs, rhs });
        }
    }
    for k in 1..=3 {
        specs.push(FamilySpec::Friendship { k });
    }
    specs
}

#[test]
fn deciders_agree_on_every_graph_up_to_order_six() {
    for n in 4..=6 {
        let mut members = 0usize;
        let all = connected_labeled(n);
        let total = all.len();
        for g in all {
            if g.is_complete() {
                continue;
            }
            let structural = classify_structural(&g).unwrap();
            let spectral = classify_spectral(&g).unwrap();
            assert_eq!(
                structural.in_class,
                spectral.in_class,
                "deciders disagree on {}",
                to_graph6(&g)
            );
            if structural.in_class {
                members += 1;
                let family = structural.family.expect("members carry a family");
                family.validate().unwrap();
                // The family's closed-form spectrum must be the graph's
                // actual spectrum: recognition, construction and the
                // closed forms all have to point at the same object.
                let closed = expected_spectrum(&family).unwrap();
                assert!(
                    closed.matches(&distance_spectrum(&g).unwrap(), 1e-8).unwrap(),
                    "{} was recognised as {family} but the spectra differ",
                    to_graph6(&g)
                );
            } else {
                assert!(
                    matches!(structural.witness, Some(Witness::Pattern { .. })),
                    "{} rejected without a forbidden pattern",
                    to_graph6(&g)
                );
            }
        }
        assert!(members > 0, "order {n} should contain members ({total} graphs)");
    }
}

#[test]
fn members_contain_no_forbidden_pattern_up_to_order_six() {
    let catalog = pattern_catalog().unwrap();
    for n in 4..=6 {
        for g in connected_labeled(n) {
            if g.is_complete() || !classify_spectral(&g).unwrap().in_class {
                continue;
            }
            for (name, pattern) in &catalog {
                if pattern.n() > g.n() {
                    break;
                }
                assert!(
                    contains_induced(&g, pattern).is_none(),
                    "member {} contains forbidden {name}",
                    to_graph6(&g)
                );
            }
        }
    }
}

#[test]
fn two_exceptional_eigenvalues_at_order_six_means_k2_join_2k2() {
    // Of the three shapes with exactly two distance eigenvalues different
    // from −1 and −3, only K₂ ∨ 2K₂ has order six: (K₅ ∪ K₁) ∨ mK₂ starts
    // at order eight and m₁K₂ ∨ m₂K₂ needs both m ≥ 2.
    let model = build_family(&FamilySpec::KrJoin {
        r: 2,
        rhs: TFactor::T4 { m: 2, n: 0 },
    })
    .unwrap();
    let mut hits = 0usize;
    for g in connected_labeled(6) {
        let is_h = is_h_member(&g).unwrap();
        assert_eq!(
            is_h,
            isomorphic(&g, &model),
            "{} mischaracterised",
            to_graph6(&g)
        );
        if is_h {
            hits += 1;
            assert!(classify_spectral(&g).unwrap().in_class);
        }
    }
    // |Aut| = 2 (universal pair) × 2·2 (within edges) × 2 (swap edges) = 16,
    // so there are 6!/16 = 45 labelings; pin the count against drift.
    assert_eq!(hits, 45);
}

#[test]
fn certificates_are_sound_at_order_six() {
    for g in connected_labeled(6) {
        for cert in multiplicity_certificates(&g).unwrap() {
            assert!(
                cert.lower_bound <= exact_multiplicity(&g, cert.eigenvalue),
                "{}: bound for {} overshoots",
                to_graph6(&g),
                cert.eigenvalue
            );
            assert_eq!(cert.lower_bound, cert.witnesses.len());
        }
    }
}

#[test]
fn closed_forms_match_computed_spectra_on_the_small_grid() {
    let mut checked = 0usize;
    for spec in small_parameter_grid() {
        let g = build_family(&spec).unwrap();
        let closed = expected_spectrum(&spec).unwrap();
        let spectrum = distance_spectrum(&g).unwrap();
        assert!(
            closed.matches(&spectrum, 1e-8).unwrap(),
            "{spec}: closed form disagrees with computed spectrum {spectrum}"
        );
        checked += 1;
    }
    assert!(checked > 300, "grid unexpectedly small: {checked}");
}

#[test]
fn every_family_member_is_p4_free() {
    for spec in small_parameter_grid() {
        let g = build_family(&spec).unwrap();
        assert!(is_p4_free(&g), "{spec} contains an induced P4");
    }
}
