//! The extremal graphs `F(n, m)` and `H_n`, enumeration of odd-cycle graphs,
//! and exhaustive verification sweeps.
//!
//! `F(n, m)` is a star `K_{1,n-1}` with `m - n + 1` extra edges forming a
//! matching on the leaves. It exists for `n - 1 <= m <= floor(3(n-1)/2)`, and
//! `H_n` is the case with the most edges.

mod enumerate;
mod verify;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub use enumerate::{
    connected_odd_cacti, enumerate_odd_cycle_graphs, fold_all_labeled, fold_labeled, for_each_labeled,
    odd_cycle_graph_classes, EnumerationMode, MAX_LABELED_ORDER, MAX_STRUCTURED_ORDER,
};
pub use verify::{
    expected_maximizers, verify_classification_and_maximum, verify_enumeration_agreement,
    verify_extremal_classification, verify_kelmans_dominance, verify_monotonicity, verify_order_maximum,
    verify_radius_independence, verify_reduction, verify_skew_identity, Counterexample, VerificationReport, Witness,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("F({n}, {m}) needs {lo} <= m <= {hi}")]
    SizeOutOfRange { n: usize, m: usize, lo: usize, hi: usize },
    #[error("enumeration is limited to {max} vertices in this mode, got {n}")]
    OrderTooLarge { n: usize, max: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `floor(3(n-1)/2)`, the most edges an odd-cycle graph on `n` vertices has.
pub fn max_odd_cycle_edges(n: usize) -> usize {
    3 * n.saturating_sub(1) / 2
}

/// `F(n, m)` with its canonical labeling: vertex 0 is the center and the
/// extra edges are `(1,2), (3,4), ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ExtremalFamily {
    n: usize,
    m: usize,
    #[serde(serialize_with = "as_graph6")]
    graph: Graph,
}

fn as_graph6<S: serde::Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&g.to_graph6())
}

impl ExtremalFamily {
    pub fn new(n: usize, m: usize) -> Result<Self, ExtremalError> {
        let (lo, hi) = (n.saturating_sub(1), max_odd_cycle_edges(n));
        if n == 0 || m < lo || m > hi {
            return Err(ExtremalError::SizeOutOfRange { n, m, lo, hi });
        }
        let extra = m - lo;
        let star = (1..n).map(|v| (0, v));
        let matching = (0..extra).map(|i| (2 * i + 1, 2 * i + 2));
        let graph = Graph::from_edges(n, star.chain(matching))?;
        Ok(ExtremalFamily { n, m, graph })
    }

    /// `H_n = F(n, floor(3(n-1)/2))`.
    pub fn saturated(n: usize) -> Result<Self, ExtremalError> {
        Self::new(n, max_odd_cycle_edges(n))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

pub fn extremal_graph(n: usize, m: usize) -> Result<Graph, ExtremalError> {
    ExtremalFamily::new(n, m).map(ExtremalFamily::into_graph)
}

pub fn saturated_extremal_graph(n: usize) -> Result<Graph, ExtremalError> {
    ExtremalFamily::saturated(n).map(ExtremalFamily::into_graph)
}
