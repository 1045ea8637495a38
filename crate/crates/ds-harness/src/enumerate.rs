//! Labeled enumeration of small connected graphs, and brute-force canonical
//! forms for isomorphism testing and deduplication.
//!
//! A graph on n ≤ 11 vertices is identified with its upper-triangle
//! adjacency bit string in column order x(0,1), x(0,2), x(1,2), x(0,3), …
//! (the graph6 bit order), packed most-significant-first into a `u64`. The
//! canonical form is the lexicographically least such string over all n!
//! relabelings, found by placing vertices position by position and pruning
//! any branch whose prefix already exceeds the best complete code.

use crate::HarnessError;
use ds_graph::Graph;

/// Internal enumeration cap: the labeled space doubles per edge slot and
/// n = 8 already means 2²⁸ masks.
pub(crate) const MAX_ENUM: usize = 8;
/// Canonical codes must fit u64: n(n−1)/2 ≤ 64 holds through n = 11.
pub(crate) const MAX_CANON: usize = 11;
/// Per-graph canonicalization during enumeration stays affordable to 7.
pub(crate) const MAX_DEDUP: usize = 7;

pub(crate) fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Adjacency bitmask rows, sized for the canonical-form cap.
#[derive(Clone, Copy)]
pub(crate) struct BitGraph {
    pub(crate) n: usize,
    rows: [u16; MAX_CANON],
}

impl BitGraph {
    /// Decode an edge mask whose bit i is the i-th upper-triangle pair in
    /// column order (least significant bit first — the enumeration order).
    pub(crate) fn from_mask(n: usize, mask: u64) -> Self {
        let mut rows = [0u16; MAX_CANON];
        let mut idx = 0;
        for k in 1..n {
            for j in 0..k {
                if mask >> idx & 1 == 1 {
                    rows[j] |= 1 << k;
                    rows[k] |= 1 << j;
                }
                idx += 1;
            }
        }
        BitGraph { n, rows }
    }

    pub(crate) fn from_graph(g: &Graph) -> Result<Self, HarnessError> {
        let n = g.n();
        if n > MAX_CANON {
            return Err(HarnessError::OrderTooLargeForCanonical(n));
        }
        let mut rows = [0u16; MAX_CANON];
        for (u, v) in g.edges() {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(BitGraph { n, rows })
    }

    pub(crate) fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for k in 1..self.n {
            for j in 0..k {
                if self.rows[j] >> k & 1 == 1 {
                    edges.push((j, k));
                }
            }
        }
        Graph::from_edges(self.n, &edges).expect("bitmask graphs are always well-formed")
    }

    pub(crate) fn is_connected(&self) -> bool {
        let full = (1u16 << self.n) - 1;
        let mut reach: u16 = 1;
        loop {
            let mut next = reach;
            let mut pending = reach;
            while pending != 0 {
                let v = pending.trailing_zeros() as usize;
                pending &= pending - 1;
                next |= self.rows[v];
            }
            if next == reach {
                return reach == full;
            }
            reach = next;
        }
    }

    /// The graph's own bit string under the identity labeling.
    pub(crate) fn identity_code(&self) -> u64 {
        let mut code = 0u64;
        for k in 1..self.n {
            for j in 0..k {
                code = code << 1 | (self.rows[j] >> k & 1) as u64;
            }
        }
        code
    }

    /// Lexicographically least bit string over all relabelings.
    pub(crate) fn canonical_code(&self) -> u64 {
        let mut s = Searcher::new(self, None);
        s.place(0, 0, 0, 0);
        s.best
    }

    /// Whether this labeling IS the canonical one. Seeding the search with
    /// the identity code lets it stop at the first strictly smaller leaf.
    pub(crate) fn is_canonical(&self) -> bool {
        let own = self.identity_code();
        let mut s = Searcher::new(self, Some(own));
        s.place(0, 0, 0, 0);
        s.best == own
    }
}

/// State of the minimum-code search. `best` starts as either a sentinel
/// above every real code or a seed to beat; `stop_below_seed` makes the
/// search abort once any leaf beats the seed (enough for `is_canonical`).
struct Searcher<'a> {
    g: &'a BitGraph,
    total_bits: usize,
    perm: [usize; MAX_CANON],
    best: u64,
    seeded: bool,
    done: bool,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a BitGraph, seed: Option<u64>) -> Self {
        Searcher {
            g,
            total_bits: pair_count(g.n),
            perm: [0; MAX_CANON],
            best: seed.unwrap_or(u64::MAX),
            seeded: seed.is_some(),
            done: false,
        }
    }

    fn place(&mut self, depth: usize, prefix: u64, bits: usize, used: u16) {
        if self.done {
            return;
        }
        if depth == self.g.n {
            if prefix < self.best {
                self.best = prefix;
                if self.seeded {
                    self.done = true;
                }
            }
            return;
        }
        for v in 0..self.g.n {
            if used >> v & 1 == 1 {
                continue;
            }
            let mut col = 0u64;
            for j in 0..depth {
                col = col << 1 | (self.g.rows[v] >> self.perm[j] & 1) as u64;
            }
            let cand = prefix << depth | col;
            if self.best != u64::MAX && cand > self.best >> (self.total_bits - bits - depth) {
                continue;
            }
            self.perm[depth] = v;
            self.place(depth + 1, cand, bits + depth, used | 1 << v);
            if self.done {
                return;
            }
        }
    }
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = pair_count(n);
    let mut edges = Vec::new();
    let mut idx = 0;
    for k in 1..n {
        for j in 0..k {
            if code >> (total - 1 - idx) & 1 == 1 {
                edges.push((j, k));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("codes decode to well-formed graphs")
}

/// Canonical representative of the isomorphism class: the relabeling whose
/// adjacency bit string is lexicographically least. Two graphs are
/// isomorphic exactly when their canonical forms are equal.
pub fn canonical_form(g: &Graph) -> Result<Graph, HarnessError> {
    let bg = BitGraph::from_graph(g)?;
    Ok(graph_from_code(bg.n, bg.canonical_code()))
}

/// Isomorphism by canonical-code comparison (order ≤ 11).
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool, HarnessError> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(BitGraph::from_graph(a)?.canonical_code() == BitGraph::from_graph(b)?.canonical_code())
}

fn check_enum_order(n: usize) -> Result<(), HarnessError> {
    if n == 0 || n > MAX_ENUM {
        return Err(HarnessError::EnumerationOrder(n));
    }
    Ok(())
}

/// Stream every connected labeled graph on n vertices, in edge-mask order.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>, HarnessError> {
    check_enum_order(n)?;
    let masks = 1u64 << pair_count(n);
    Ok((0..masks).filter_map(move |mask| {
        let bg = BitGraph::from_mask(n, mask);
        bg.is_connected().then(|| bg.to_graph())
    }))
}

/// One representative per isomorphism class of connected graphs on n ≤ 7
/// vertices: the labeled enumeration filtered to canonical labelings.
pub fn enumerate_connected_classes(n: usize) -> Result<Vec<Graph>, HarnessError> {
    check_enum_order(n)?;
    if n > MAX_DEDUP {
        return Err(HarnessError::DedupTooLarge(n));
    }
    let masks = 1u64 << pair_count(n);
    let mut out = Vec::new();
    for mask in 0..masks {
        let bg = BitGraph::from_mask(n, mask);
        if bg.is_connected() && bg.is_canonical() {
            out.push(bg.to_graph());
        }
    }
    Ok(out)
}

/// Worker unit for the campaign runner: visit the connected graphs whose
/// edge masks lie in [lo, hi), optionally only canonical labelings.
pub(crate) fn for_each_connected<F: FnMut(Graph)>(
    n: usize,
    dedup: bool,
    lo: u64,
    hi: u64,
    mut f: F,
) {
    for mask in lo..hi {
        let bg = BitGraph::from_mask(n, mask);
        if !bg.is_connected() || (dedup && !bg.is_canonical()) {
            continue;
        }
        f(bg.to_graph());
    }
}
