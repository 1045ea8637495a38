//! Simple undirected graphs with the operations the distance-spectra stack
//! needs: clique/union/join construction, complements, induced subgraphs,
//! BFS all-pairs distances, and the graph6 interchange format.
//!
//! Vertices are `0..n` with `1 <= n <= 1024`. Adjacency is stored as one
//! bitset row per vertex, which keeps BFS and induced-subgraph extraction
//! cheap for the exhaustive small-order sweeps the verification campaigns
//! run.

mod graph6;

pub use graph6::{parse_graph6, to_graph6, Graph6Error};

use thiserror::Error;

/// Hard cap on vertex count; keeps graph6 headers in the 3-byte tier and
/// bitset rows small.
pub const MAX_ORDER: usize = 1024;

const WORD_BITS: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order must be at least 1")]
    OrderZero,
    #[error("graph order {0} exceeds the maximum {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("duplicate vertex {0} in vertex set")]
    DuplicateVertex(usize),
}

/// An undirected simple graph on `0..n`.
///
/// Symmetry and loop-freeness are maintained by construction: `add_edge` is
/// the only mutator and inserts both directions, rejecting loops.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>, // n rows of `words` u64 each
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, g6={})", self.n, to_graph6(self))
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::OrderZero);
        }
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let words = n.div_ceil(WORD_BITS);
        Ok(Graph { n, words, adj: vec![0; n * words] })
    }

    /// Complete graph K_s.
    pub fn complete(s: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(s)?;
        for u in 0..s {
            for v in (u + 1)..s {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Path v0 - v1 - ... - v{n-1}.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for u in 1..n {
            g.add_edge(u - 1, u)?;
        }
        Ok(g)
    }

    /// Cycle on n >= 3 vertices.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::path(n)?;
        if n >= 3 {
            g.add_edge(n - 1, 0)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: self.n });
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u * self.words + v / WORD_BITS] |= 1 << (v % WORD_BITS);
        self.adj[v * self.words + u / WORD_BITS] |= 1 << (u % WORD_BITS);
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        (0..self.n).filter(move |&u| row[u / WORD_BITS] >> (u % WORD_BITS) & 1 == 1)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Disjoint union; `other`'s labels are shifted up by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n)?;
        }
        Ok(g)
    }

    /// Join: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v)?;
            }
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("order already validated");
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).expect("in range");
                }
            }
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        // BFS from 0 over bitset rows; cheaper than materializing components.
        let mut seen = vec![0u64; self.words];
        seen[0] = 1;
        let mut frontier = vec![0usize];
        let mut count = 1;
        while let Some(u) = frontier.pop() {
            let row = self.row(u);
            for w in 0..self.words {
                let mut new = row[w] & !seen[w];
                seen[w] |= new;
                while new != 0 {
                    let b = new.trailing_zeros() as usize;
                    new &= new - 1;
                    frontier.push(w * WORD_BITS + b);
                    count += 1;
                }
            }
        }
        count == self.n
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Subgraph induced on `s`, relabeled `0..s.len()` in ascending order of
    /// the original labels.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<Graph, GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut vs = s.to_vec();
        vs.sort_unstable();
        for w in vs.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateVertex(w[0]));
            }
        }
        for &v in &vs {
            self.check_vertex(v)?;
        }
        let mut g = Graph::empty(vs.len())?;
        for i in 0..vs.len() {
            for j in (i + 1)..vs.len() {
                if self.has_edge(vs[i], vs[j]) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// All-pairs shortest paths by BFS from every vertex.
    pub fn distance_matrix(&self) -> Result<DistanceMatrix, GraphError> {
        let n = self.n;
        let mut d = vec![0u16; n * n];
        let mut order = Vec::with_capacity(n);
        for s in 0..n {
            let mut seen = vec![0u64; self.words];
            seen[s / WORD_BITS] = 1 << (s % WORD_BITS);
            order.clear();
            order.push(s);
            let mut head = 0;
            while head < order.len() {
                let u = order[head];
                head += 1;
                let du = d[s * n + u];
                let row = self.row(u);
                for w in 0..self.words {
                    let mut new = row[w] & !seen[w];
                    seen[w] |= new;
                    while new != 0 {
                        let v = w * WORD_BITS + new.trailing_zeros() as usize;
                        new &= new - 1;
                        d[s * n + v] = du + 1;
                        order.push(v);
                    }
                }
            }
            if order.len() != n {
                return Err(GraphError::Disconnected);
            }
        }
        Ok(DistanceMatrix { n, d })
    }

    pub fn diameter(&self) -> Result<u16, GraphError> {
        Ok(self.distance_matrix()?.max_entry())
    }
}

/// Exact all-pairs distance matrix of a connected graph; entries fit u16
/// (order is capped at 1024, so eccentricities are below 2^16).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u16>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u16 {
        self.d[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u16] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    pub fn max_entry(&self) -> u16 {
        *self.d.iter().max().expect("n >= 1")
    }

    /// Sum of distances from `v` to every vertex.
    pub fn transmission(&self, v: usize) -> u64 {
        self.row(v).iter().map(|&x| x as u64).sum()
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|&x| x as f64).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests;
