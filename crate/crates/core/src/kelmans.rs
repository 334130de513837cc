//! Kelmans transformations, the reduction of a connected odd-cycle graph to
//! `F(n, m)`, and the exact dominance relation between matching polynomials.
//!
//! `KT(G, u, v)` moves every edge `vw` with `w != u` and `w` not adjacent to
//! `u` over to `uw`. `u` is the beneficiary and `v` the co-beneficiary.
//!
//! The reduction runs in two phases:
//!
//! - *LongCycle*: while an odd cycle of length at least 5 remains, take the
//!   lexicographically smallest one as `c0 c1 c2 ...` and apply
//!   `KT(G, c0, c2)`. The middle vertex `c2` ends with degree 1.
//! - *DegreeLift*: while the maximum degree is below `n - 1`, take the
//!   smallest maximum-degree vertex `u`, the smallest vertex `v` at distance 2
//!   and the smallest common neighbour `w`, and apply `KT(G, u, w)`.
//!
//! `G1 ⪰ G2` means `m(G2, x) >= m(G1, x)` for every `x >= t(G1)`, and `≻` the
//! strict version. [`dominance`] decides it exactly from the difference
//! `d = m(G2) - m(G1)` and the largest roots involved.

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{bit, is_odd_cycle_graph, long_odd_cycles, Bits, Edge, Graph};
use crate::matching::matching_polynomial;
use crate::poly::IntPolynomial;
use crate::roots::{compare_roots, default_eps, max_real_root, AlgebraicRoot, RootError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KelmansError {
    #[error("beneficiary and co-beneficiary must differ (both {0})")]
    SameVertex(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("the reduction needs a connected graph")]
    Disconnected,
    #[error("the reduction needs an odd-cycle graph")]
    EvenCycle,
    #[error("the reduction did not finish within {0} steps")]
    Stalled(usize),
    #[error("trace step {step}: {msg}")]
    InvalidTrace { step: usize, msg: String },
}

/// One application of `KT(G, u, v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KelmansStep {
    beneficiary: usize,
    co_beneficiary: usize,
    moved: Vec<usize>,
}

impl KelmansStep {
    pub fn beneficiary(&self) -> usize {
        self.beneficiary
    }

    pub fn co_beneficiary(&self) -> usize {
        self.co_beneficiary
    }

    /// The far endpoints `w` of the moved edges.
    pub fn moved_vertices(&self) -> &[usize] {
        &self.moved
    }

    /// Rewrites `(v, w) -> (u, w)`.
    pub fn moved_edges(&self) -> Vec<(Edge, Edge)> {
        self.moved
            .iter()
            .map(|&w| ((self.co_beneficiary, w), (self.beneficiary, w)))
            .collect()
    }

    pub fn is_noop(&self) -> bool {
        self.moved.is_empty()
    }
}

impl Serialize for KelmansStep {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("KelmansStep", 3)?;
        st.serialize_field("u", &self.beneficiary)?;
        st.serialize_field("v", &self.co_beneficiary)?;
        st.serialize_field("moved", &self.moved_edges())?;
        st.end()
    }
}

/// `KT(g, u, v)`.
pub fn kelmans_transform(g: &Graph, u: usize, v: usize) -> Result<(Graph, KelmansStep), KelmansError> {
    let n = g.order();
    for vertex in [u, v] {
        if vertex >= n {
            return Err(KelmansError::VertexOutOfRange { vertex, n });
        }
    }
    if u == v {
        return Err(KelmansError::SameVertex(u));
    }
    let movable = g.neighbors(v) & !g.neighbors(u) & !bit(u);
    let mut out = g.clone();
    for w in Bits(movable) {
        out.delete_edge(v, w);
        out.insert_edge(u, w);
    }
    let step = KelmansStep {
        beneficiary: u,
        co_beneficiary: v,
        moved: Bits(movable).collect(),
    };
    Ok((out, step))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ReductionPhase {
    LongCycle,
    DegreeLift,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub phase: ReductionPhase,
    pub step: KelmansStep,
    pub result: Graph,
}

impl Serialize for ReductionStep {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ReductionStep", 5)?;
        st.serialize_field("phase", &self.phase)?;
        st.serialize_field("u", &self.step.beneficiary)?;
        st.serialize_field("v", &self.step.co_beneficiary)?;
        st.serialize_field("moved", &self.step.moved_edges())?;
        st.serialize_field("graph6", &self.result.to_graph6())?;
        st.end()
    }
}

/// Every Kelmans step from a start graph to its final graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    start: Graph,
    steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    pub fn start(&self) -> &Graph {
        &self.start
    }

    pub fn steps(&self) -> &[ReductionStep] {
        &self.steps
    }

    pub fn final_graph(&self) -> &Graph {
        self.steps.last().map_or(&self.start, |s| &s.result)
    }

    pub fn phase_count(&self, phase: ReductionPhase) -> usize {
        self.steps.iter().filter(|s| s.phase == phase).count()
    }

    /// The start graph followed by every intermediate result.
    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        std::iter::once(&self.start).chain(self.steps.iter().map(|s| &s.result))
    }

    /// Replays every step and checks it reproduces the recorded graph with
    /// the same order and size.
    pub fn validate(&self) -> Result<(), KelmansError> {
        let mut current = &self.start;
        for (i, s) in self.steps.iter().enumerate() {
            let (next, replay) =
                kelmans_transform(current, s.step.beneficiary, s.step.co_beneficiary).map_err(|e| {
                    KelmansError::InvalidTrace {
                        step: i,
                        msg: e.to_string(),
                    }
                })?;
            if replay != s.step || next != s.result {
                return Err(KelmansError::InvalidTrace {
                    step: i,
                    msg: "replay differs".into(),
                });
            }
            if next.order() != self.start.order() || next.size() != self.start.size() {
                return Err(KelmansError::InvalidTrace {
                    step: i,
                    msg: "order or size changed".into(),
                });
            }
            current = &s.result;
        }
        Ok(())
    }
}

impl Serialize for ReductionTrace {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ReductionTrace", 3)?;
        st.serialize_field("start", &self.start.to_graph6())?;
        st.serialize_field("steps", &self.steps)?;
        st.serialize_field("final", &self.final_graph().to_graph6())?;
        st.end()
    }
}

/// The long-cycle move, if any long odd cycle remains.
fn long_cycle_move(g: &Graph) -> Result<Option<(usize, usize)>, KelmansError> {
    let cycles = long_odd_cycles(g).map_err(|_| KelmansError::EvenCycle)?;
    Ok(cycles.cycles().iter().min().map(|c| (c[0], c[2])))
}

/// The degree-lift move `(u, w)`, if the maximum degree is below `n - 1`.
fn degree_lift_move(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    let top = g.max_degree();
    if top + 1 >= n {
        return None;
    }
    let u = (0..n).find(|&x| g.degree(x) == top)?;
    let near = g.neighbors(u);
    let two = Bits(near).fold(0u64, |acc, w| acc | g.neighbors(w)) & !near & !bit(u);
    let v = Bits(two).next()?;
    let w = Bits(near & g.neighbors(v)).next()?;
    Some((u, w))
}

/// Carries a connected odd-cycle graph to a graph isomorphic to `F(n, m)`.
pub fn reduce_to_extremal(g: &Graph) -> Result<ReductionTrace, KelmansError> {
    if !g.is_connected() {
        return Err(KelmansError::Disconnected);
    }
    if !is_odd_cycle_graph(g) {
        return Err(KelmansError::EvenCycle);
    }
    let limit = g.size() + g.order();
    let mut steps = Vec::new();
    let mut current = g.clone();
    loop {
        let (phase, (u, v)) = if let Some(mv) = long_cycle_move(&current)? {
            (ReductionPhase::LongCycle, mv)
        } else if let Some(mv) = degree_lift_move(&current) {
            (ReductionPhase::DegreeLift, mv)
        } else {
            break;
        };
        if steps.len() == limit {
            return Err(KelmansError::Stalled(limit));
        }
        let (next, step) = kelmans_transform(&current, u, v)?;
        steps.push(ReductionStep {
            phase,
            step,
            result: next.clone(),
        });
        current = next;
    }
    Ok(ReductionTrace {
        start: g.clone(),
        steps,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DominanceVerdict {
    /// `m(G2, x) > m(G1, x)` on `[t(G1), ∞)`.
    StrictlyDominates,
    /// `m(G2, x) >= m(G1, x)` on the ray with equality somewhere.
    WeaklyDominates,
    EqualPolynomials,
    Incomparable,
}

impl DominanceVerdict {
    /// Whether `G1 ⪰ G2` holds.
    pub fn is_dominant(self) -> bool {
        self != DominanceVerdict::Incomparable
    }
}

impl fmt::Display for DominanceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The verdict together with what it was decided from.
#[derive(Debug, Clone, Serialize)]
pub struct DominanceDetail {
    pub verdict: DominanceVerdict,
    /// `m(G2, x) - m(G1, x)`.
    pub difference: IntPolynomial,
    /// `t(G1)`.
    pub threshold: AlgebraicRoot,
    /// Largest real root of the difference, if it has one.
    pub difference_root: Option<AlgebraicRoot>,
}

fn max_root_or_none(p: &IntPolynomial, eps: &BigRational) -> Option<AlgebraicRoot> {
    match max_real_root(p, eps) {
        Ok(r) => Some(r),
        Err(RootError::NoRealRoot(_)) => None,
        Err(e) => unreachable!("nonzero polynomial and positive eps: {e}"),
    }
}

/// Decides `G1 ⪰ G2` / `G1 ≻ G2` from the two matching polynomials.
pub fn dominance_of_polynomials(m1: &IntPolynomial, m2: &IntPolynomial) -> DominanceDetail {
    let eps = default_eps();
    let threshold = max_real_root(m1, &eps).expect("matching polynomials have real roots");
    let difference = m2 - m1;
    let decide = |verdict, difference_root| DominanceDetail {
        verdict,
        difference: difference.clone(),
        threshold: threshold.clone(),
        difference_root,
    };
    if difference.is_zero() {
        return decide(DominanceVerdict::EqualPolynomials, None);
    }
    let root = max_root_or_none(&difference, &eps);
    if difference.eventual_sign() == Ordering::Less {
        return decide(DominanceVerdict::Incomparable, root);
    }
    let verdict = match &root {
        None => DominanceVerdict::StrictlyDominates,
        Some(r) => match compare_roots(r, &threshold) {
            Ordering::Less => DominanceVerdict::StrictlyDominates,
            Ordering::Equal => DominanceVerdict::WeaklyDominates,
            Ordering::Greater => {
                // roots of even multiplicity beyond t(G1) only touch zero
                let odd = difference
                    .square_free_decomposition()
                    .into_iter()
                    .filter(|(_, k)| k % 2 == 1)
                    .fold(IntPolynomial::one(), |acc, (f, _)| &acc * &f);
                let crosses =
                    max_root_or_none(&odd, &eps).is_some_and(|r| compare_roots(&r, &threshold) == Ordering::Greater);
                if crosses {
                    DominanceVerdict::Incomparable
                } else {
                    DominanceVerdict::WeaklyDominates
                }
            }
        },
    };
    decide(verdict, root)
}

pub fn dominance_detail(g1: &Graph, g2: &Graph) -> DominanceDetail {
    dominance_of_polynomials(&matching_polynomial(g1), &matching_polynomial(g2))
}

/// Exact verdict on `G1` versus `G2`.
pub fn dominance(g1: &Graph, g2: &Graph) -> DominanceVerdict {
    dominance_detail(g1, g2).verdict
}
