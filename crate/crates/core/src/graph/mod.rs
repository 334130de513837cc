//! Simple undirected graphs on at most 64 vertices.
//!
//! Each adjacency row is a single `u64`, so neighborhoods, induced subgraphs
//! and connectivity are all bit operations. Graphs are built once (from an
//! edge list, graph6, or one of the constructors) and treated as values
//! afterwards.

mod blocks;
mod edgelist;
mod graph6;
mod iso;

use std::fmt;

use thiserror::Error;

pub use blocks::{
    block_decomposition, connected_components, is_odd_cycle_graph, long_odd_cycles, BlockDecomposition, LongOddCycleSet,
};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use graph6::{parse_graph6, write_graph6};
pub use iso::{automorphism_count, find_isomorphism, invariant_key, is_isomorphic, GraphInvariant, MAX_ISO_VERTICES};

pub const MAX_VERTICES: usize = 64;

/// An undirected edge, normally stored with the smaller endpoint first.
pub type Edge = (usize, usize);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} is outside 1..=64")]
    VertexCount(usize),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) listed twice")]
    DuplicateEdge(usize, usize),
    #[error("graph6 header is malformed: {0}")]
    Graph6Header(String),
    #[error("graph6 encodes {0} vertices, more than the supported 64")]
    Graph6Order(usize),
    #[error("graph6 payload has {found} bytes, expected {expected}")]
    Graph6Payload { expected: usize, found: usize },
    #[error("graph6 payload byte {0:#04x} is not printable graph6 data")]
    Graph6Byte(u8),
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleLength(usize),
    #[error("graph has an even cycle")]
    EvenCycle,
    #[error("isomorphism search supports at most {max} vertices, got {n}")]
    TooLargeForIsomorphism { n: usize, max: usize },
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates the set bits of a mask, lowest first.
#[derive(Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from a bitmask over the lexicographically ordered
    /// vertex pairs `(0,1), (0,2), ..., (n-2,n-1)`. Requires `n <= 11`.
    pub fn from_pair_bits(n: usize, bits: u64) -> Result<Self, GraphError> {
        if n > 11 {
            return Err(GraphError::VertexCount(n));
        }
        let mut g = Graph::empty(n)?;
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits >> k & 1 == 1 {
                    g.insert_edge(u, v);
                }
                k += 1;
            }
        }
        Ok(g)
    }

    /// Inverse of [`Graph::from_pair_bits`].
    pub fn pair_bits(&self) -> Option<u64> {
        if self.n > 11 {
            return None;
        }
        let mut bits = 0u64;
        let mut k = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    bits |= 1 << k;
                }
                k += 1;
            }
        }
        Some(bits)
    }

    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_VERTICES);
        Graph { n: adj.len(), adj }
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub(crate) fn delete_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    /// A copy of this graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.insert_edge(u, v);
        Ok(g)
    }

    /// A copy of this graph with edge `uv` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        if u < self.n && v < self.n {
            g.delete_edge(u, v);
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Mask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbor_iter(&self, v: usize) -> Bits {
        Bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in Bits(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start) & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// True if every edge of `self` is an edge of `other` on the same vertex set.
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length must equal the order");
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for w in Bits(self.adj[u]) {
                adj[perm[u]] |= bit(perm[w]);
            }
        }
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by the vertices in `mask`, with the map from new
    /// labels back to the original ones. `None` if `mask` selects nothing.
    pub fn induced(&self, mask: u64) -> Option<(Graph, Vec<usize>)> {
        let mask = mask & self.vertex_mask();
        if mask == 0 {
            return None;
        }
        let map: Vec<usize> = Bits(mask).collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| Bits(self.adj[v] & mask).fold(0u64, |acc, w| acc | bit(index[w])))
            .collect();
        Some((Graph::from_rows(adj), map))
    }

    /// Vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// This graph plus `k` isolated vertices.
    pub fn with_isolated(&self, k: usize) -> Result<Self, GraphError> {
        if k == 0 {
            return Ok(self.clone());
        }
        self.disjoint_union(&Graph::empty(k)?)
    }

    pub fn to_graph6(&self) -> String {
        write_graph6(self)
    }

    pub fn from_graph6(text: &str) -> Result<Self, GraphError> {
        parse_graph6(text)
    }
}

// Standard families, mostly for tests and the command line.
impl Graph {
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        Ok(g)
    }

    /// The star `K_{1,s}` with center 0.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::CycleLength(n));
        }
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", write_graph6(self), self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph6(self))
    }
}
