//! Exact algebraic tools for odd-cycle graphs.
//!
//! The crate computes matching polynomials with exact integer coefficients,
//! isolates and compares their real roots with Sturm sequences, builds
//! skew-adjacency characteristic polynomials for arbitrary orientations, and
//! runs Kelmans transformations together with the reduction that carries any
//! connected odd-cycle graph to the star-plus-leaf-matching graph `F(n, m)`.
//!
//! The `extremal` module ties these together into exhaustive verification
//! sweeps over small graphs. Sweeps run on rayon when the `parallel` feature
//! is enabled (the default) and fall back to plain iterators otherwise; see
//! [`exec::Execution`].

pub mod exec;
pub mod extremal;
pub mod graph;
pub mod kelmans;
pub mod matching;
pub mod poly;
pub mod roots;
pub mod skew;

pub use exec::Execution;
pub use extremal::{extremal_graph, max_odd_cycle_edges, saturated_extremal_graph, ExtremalFamily, VerificationReport};
pub use graph::{Edge, Graph, GraphError};
pub use kelmans::{dominance, kelmans_transform, reduce_to_extremal, DominanceVerdict};
pub use matching::{matching_polynomial, matching_profile, MatchingProfile};
pub use poly::IntPolynomial;
pub use roots::{compare_roots, max_matching_root, max_real_root, AlgebraicRoot};
pub use skew::{skew_char_poly, Orientation};
