//! Simple undirected graphs on dense vertex identifiers, the families used
//! throughout the crate, and the classical cut parameters.

mod flow;
mod generate;
mod params;
mod text;

pub use generate::{generate, Family};
pub use params::{
    components, connectivity, connectivity_by_cuts, edge_connectivity, is_connected,
    is_two_connected, is_two_edge_connected, k_connectivity_cut, local_edge_connectivity,
    local_vertex_connectivity, min_degree,
};
pub use text::{parse_graph, serialize_graph};

use crate::error::{input_err, Result};

/// An undirected simple graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically.
/// Values are immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return input_err(format!("self-loop at vertex {a}"));
            }
            if a >= n || b >= n {
                return input_err(format!("edge {a}-{b} out of range for n = {n}"));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return input_err(format!("duplicate edge {}-{}", w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Builds a graph from pairs, silently merging duplicates. Self-loops are still rejected.
    pub fn from_pairs_dedup(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut list: Vec<_> = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        list.sort_unstable();
        list.dedup();
        Self::new(n, list)
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let words = n.div_ceil(64).max(1);
        let mut adj = vec![Vec::new(); n];
        let mut bits = vec![0u64; n * words];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
            bits[a * words + b / 64] |= 1 << (b % 64);
            bits[b * words + a / 64] |= 1 << (a % 64);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self {
            n,
            edges,
            adj,
            words,
            bits,
        }
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Canonically ordered edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.bits[a * self.words + b / 64] & (1 << (b % 64)) != 0
    }

    /// Position of edge `{a, b}` in [`Graph::edges`].
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).ok()
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Returns a copy with `{a, b}` added; no-op if already present.
    pub fn with_edge(&self, a: usize, b: usize) -> Result<Self> {
        if self.has_edge(a, b) {
            return Ok(self.clone());
        }
        Self::new(self.n, self.edges.iter().copied().chain([(a, b)]))
    }

    /// Returns a copy with `{a, b}` removed.
    pub fn without_edge(&self, a: usize, b: usize) -> Self {
        let key = (a.min(b), a.max(b));
        Self::from_sorted(
            self.n,
            self.edges.iter().copied().filter(|&e| e != key).collect(),
        )
    }

    /// Subgraph induced on `keep`, relabelled in the order given.
    pub fn induced(&self, keep: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| pos[a] != usize::MAX && pos[b] != usize::MAX)
            .map(|&(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b])))
            .collect::<Vec<_>>();
        let mut edges = edges;
        edges.sort_unstable();
        Self::from_sorted(keep.len(), edges)
    }

    /// Handshake check: sum of degrees equals twice the edge count.
    pub fn degree_sum(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A sorted set of distinct terminal vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Validates membership against `g`: non-empty, in range, no repeats.
    pub fn new(g: &Graph, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        if v.is_empty() {
            return input_err("terminal set is empty");
        }
        if let Some(&bad) = v.iter().find(|&&x| x >= g.n()) {
            return input_err(format!("terminal {bad} out of range for n = {}", g.n()));
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return input_err("terminal set has repeated vertices");
        }
        Ok(Self(v))
    }

    pub(crate) fn from_sorted_unchecked(v: Vec<usize>) -> Self {
        Self(v)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 0 && cur[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
