//! The two membership deciders and the exactly-two-eigenvalues test.
//!
//! Membership in the class (third-largest distance eigenvalue ≤ −1,
//! smallest ≥ −3) can be decided two independent ways:
//!
//! * **spectrally** — exact integer inertia of D + I and D + 3I, no floating
//!   point and no family knowledge;
//! * **structurally** — match the maximal join decomposition against the
//!   member families, never touching the spectrum.
//!
//! The two agree on every connected non-complete graph of order ≥ 4; the
//! test suites check this exhaustively on small orders.

use crate::family::{FamilySpec, TFactor};
use crate::patterns::{pattern_catalog, PatternName};
use crate::search::{complement_components, contains_induced};
use crate::ClassifyError;
use ds_exact::{inertia_shifted, rank, IntMatrix};
use ds_graph::{Graph, GraphError};

/// Which decider produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Structural,
    Spectral,
}

/// Evidence attached to a negative verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A forbidden pattern embedded in the graph; `embedding[i]` is the
    /// image of pattern vertex `i`.
    Pattern {
        name: PatternName,
        embedding: Vec<usize>,
    },
    /// Exact eigenvalue counts violating the class inequalities: more than
    /// two distance eigenvalues above −1, or at least one below −3.
    Inertia {
        above_minus_one: usize,
        below_minus_three: usize,
    },
    /// The graph fails the join-of-clique-unions shape test but no catalog
    /// pattern embeds. On connected non-complete graphs of order ≥ 4 this
    /// cannot happen; seeing it means the catalog is incomplete.
    Mismatch(String),
}

/// Outcome of classification: membership, the identified family for
/// structural positives, and a witness for negatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassVerdict {
    pub in_class: bool,
    pub family: Option<FamilySpec>,
    pub witness: Option<Witness>,
    pub method: Method,
}

/// The class is defined over connected non-complete graphs of order ≥ 4;
/// each violation gets its own error.
fn check_preconditions(g: &Graph) -> Result<(), ClassifyError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    if g.n() < 4 {
        return Err(ClassifyError::OrderTooSmall(g.n()));
    }
    if g.is_complete() {
        return Err(ClassifyError::CompleteGraph);
    }
    Ok(())
}

/// Decides membership from the exact inertia of D + I and D + 3I: the graph
/// is in the class iff at most two distance eigenvalues exceed −1 and none
/// is below −3. Boundary eigenvalues (exactly −1 or −3) count as inside.
pub fn classify_spectral(g: &Graph) -> Result<ClassVerdict, ClassifyError> {
    check_preconditions(g)?;
    let d = g.distance_matrix()?;
    let shift_one = inertia_shifted(&d, 1);
    let shift_three = inertia_shifted(&d, 3);
    let in_class = shift_one.n_pos <= 2 && shift_three.n_neg == 0;
    Ok(ClassVerdict {
        in_class,
        family: None,
        witness: (!in_class).then_some(Witness::Inertia {
            above_minus_one: shift_one.n_pos,
            below_minus_three: shift_three.n_neg,
        }),
        method: Method::Spectral,
    })
}

/// Decides membership by shape alone: the maximal join decomposition is
/// matched against the member families. Members get the identified
/// [`FamilySpec`]; non-members get a forbidden-pattern witness.
pub fn classify_structural(g: &Graph) -> Result<ClassVerdict, ClassifyError> {
    check_preconditions(g)?;
    match identify_family(g) {
        Some(family) => Ok(ClassVerdict {
            in_class: true,
            family: Some(family),
            witness: None,
            method: Method::Structural,
        }),
        None => Ok(ClassVerdict {
            in_class: false,
            family: None,
            witness: Some(pattern_witness(g)?),
            method: Method::Structural,
        }),
    }
}

/// Matches `g` against the member families.
///
/// Every member is a join of disjoint unions of cliques. Joining with a
/// complete graph is the same as joining with that many K₁ factors — the
/// complement of K_r falls apart into r singletons — so the maximal
/// decomposition of a member consists of some number `c` of K₁ factors
/// plus one or two larger clique-union factors, recognised by their
/// multisets of clique sizes:
///
/// * one factor `K₅ ∪ K₁` with c ≤ 2 → `S(0,1)` or `S(1,0)`;
/// * one factor shaped like a `T` with c ≥ 1 → `K_c ∨ T`;
/// * two factors, one `K₅ ∪ K₁` and one `mK₂ ∪ nK₁` → `S(m,n)`;
/// * two `T`-shaped factors and no K₁ → `T ∨ T'`.
///
/// Everything else — a lone factor, three or more big factors, a K₁
/// alongside two big factors, any non-clique-union factor, or clique sizes
/// outside the table — is a non-member.
fn identify_family(g: &Graph) -> Option<FamilySpec> {
    let factors = complement_components(g);
    if factors.len() < 2 {
        return None;
    }
    let mut singles = 0usize;
    let mut bigs: Vec<Vec<usize>> = Vec::new();
    for part in &factors {
        let sizes = clique_sizes(g, part)?;
        if sizes == [1] {
            singles += 1;
        } else {
            bigs.push(sizes);
        }
    }
    match (bigs.len(), singles) {
        (1, c) if c >= 1 => one_big_factor(&bigs[0], c),
        (2, 0) => two_big_factors(&bigs[0], &bigs[1]),
        _ => None,
    }
}

/// Clique sizes of the subgraph induced on a join factor, sorted
/// descending; `None` if some component is not a clique.
fn clique_sizes(g: &Graph, part: &[usize]) -> Option<Vec<usize>> {
    let sub = g.induced_subgraph(part).expect("factor vertices are in range");
    let mut sizes = Vec::new();
    for comp in sub.connected_components() {
        let block = sub.induced_subgraph(&comp).expect("component vertices are in range");
        if !block.is_complete() {
            return None;
        }
        sizes.push(block.n());
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Some(sizes)
}

fn one_big_factor(sizes: &[usize], c: usize) -> Option<FamilySpec> {
    if sizes == [5, 1] {
        // S(0,1) = K1 ∨ (K5 ∪ K1) and S(1,0) = K2 ∨ (K5 ∪ K1); a larger
        // clique join puts K3 ∨ (K5 ∪ K1) inside, which is forbidden.
        return match c {
            1 => Some(FamilySpec::S { m: 0, n: 1 }),
            2 => Some(FamilySpec::S { m: 1, n: 0 }),
            _ => None,
        };
    }
    t_shape(sizes).map(|rhs| FamilySpec::KrJoin { r: c, rhs })
}

fn two_big_factors(a: &[usize], b: &[usize]) -> Option<FamilySpec> {
    for (five_one, other) in [(a, b), (b, a)] {
        if five_one == [5, 1] && other.iter().all(|&s| s <= 2) {
            let m = other.iter().filter(|&&s| s == 2).count();
            let n = other.len() - m;
            return Some(FamilySpec::S { m, n });
        }
    }
    Some(FamilySpec::TJoin {
        lhs: t_shape(a)?,
        rhs: t_shape(b)?,
    })
}

/// Recognises a clique-size multiset as a `T` factor.
fn t_shape(sizes: &[usize]) -> Option<TFactor> {
    match sizes {
        [4, 1] => Some(TFactor::T1),
        [3, 1, 1] => Some(TFactor::T2),
        [3, 1] => Some(TFactor::T3),
        _ if sizes.iter().all(|&s| s <= 2) => {
            let m = sizes.iter().filter(|&&s| s == 2).count();
            let n = sizes.len() - m;
            debug_assert!(m + n >= 2, "a join factor is K1 or has two cliques");
            Some(TFactor::T4 { m, n })
        }
        _ => None,
    }
}

/// Searches the catalog, smallest pattern first, for an embedded witness.
fn pattern_witness(g: &Graph) -> Result<Witness, ClassifyError> {
    for (name, pattern) in pattern_catalog()? {
        if pattern.n() > g.n() {
            break; // catalog is sorted by order
        }
        if let Some(embedding) = contains_induced(g, &pattern) {
            return Ok(Witness::Pattern { name, embedding });
        }
    }
    Ok(Witness::Mismatch(
        "not a join of clique unions from the member table, yet no catalog pattern embeds".into(),
    ))
}

/// Does `g` have exactly two distance eigenvalues (with multiplicity)
/// different from −1 and −3? Decided exactly: the multiplicities of −1 and
/// −3 are n − rank(D + I) and n − rank(D + 3I), so the condition is
/// rank(D + I) + rank(D + 3I) = n + 2.
pub fn is_h_member(g: &Graph) -> Result<bool, ClassifyError> {
    let d = g.distance_matrix()?;
    let rank_one = rank(&IntMatrix::from_distance_shifted(&d, 1));
    let rank_three = rank(&IntMatrix::from_distance_shifted(&d, 3));
    Ok(rank_one + rank_three == d.n() + 2)
}
