//! Matching counts and the matching polynomial
//! `m(G, x) = sum_k (-1)^k m_k(G) x^(n-2k)`.
//!
//! Counts come from the edge-deletion recurrence applied to every edge at a
//! pivot vertex `v` at once:
//!
//! ```text
//! m_k(G) = m_k(G - v) + sum_{w ~ v} m_{k-1}(G - v - w)
//! ```
//!
//! so every subproblem is an induced subgraph and can be memoized on its
//! vertex mask. Disconnected subproblems are split into components and their
//! count sequences convolved.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{CheckedAdd, CheckedMul, One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{bit, Bits, Edge, Graph, GraphError};
use crate::poly::IntPolynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("union needs at least one part")]
    NoParts,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `counts[k]` is the number of `k`-edge matchings, for `k = 0..=order/2`.
/// Serialized with the counts as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatchingProfile {
    order: usize,
    counts: Vec<BigUint>,
}

impl MatchingProfile {
    pub fn from_counts(order: usize, mut counts: Vec<BigUint>) -> Self {
        counts.resize(order / 2 + 1, BigUint::zero());
        MatchingProfile { order, counts }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// Size of a maximum matching.
    pub fn matching_number(&self) -> usize {
        self.counts.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    /// `sum_k (-1)^k m_k x^(n-2k)`
    pub fn polynomial(&self) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.order + 1];
        for (k, c) in self.counts.iter().enumerate() {
            let c = BigInt::from(c.clone());
            coeffs[self.order - 2 * k] = if k % 2 == 1 { -c } else { c };
        }
        IntPolynomial::new(coeffs)
    }

    /// `sum_k m_k x^(n-2k)`, all coefficients non-negative.
    pub fn unsigned_polynomial(&self) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.order + 1];
        for (k, c) in self.counts.iter().enumerate() {
            coeffs[self.order - 2 * k] = BigInt::from(c.clone());
        }
        IntPolynomial::new(coeffs)
    }
}

impl Serialize for MatchingProfile {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MatchingProfile", 2)?;
        st.serialize_field("order", &self.order)?;
        let counts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        st.serialize_field("counts", &counts)?;
        st.end()
    }
}

trait Count: Clone + Zero + One + CheckedAdd + CheckedMul {}
impl<T: Clone + Zero + One + CheckedAdd + CheckedMul> Count for T {}

struct Counter<'a, C> {
    g: &'a Graph,
    memo: HashMap<u64, Vec<C>>,
}

impl<C: Count> Counter<'_, C> {
    fn counts(&mut self, mask: u64) -> Option<Vec<C>> {
        let k = mask.count_ones();
        if k <= 1 {
            return Some(vec![C::one()]);
        }
        if k <= 3 {
            let mut e = C::zero();
            for v in Bits(mask) {
                for _ in Bits(self.g.neighbors(v) & mask & !(bit(v).wrapping_mul(2).wrapping_sub(1))) {
                    e = e.checked_add(&C::one())?;
                }
            }
            return Some(if e.is_zero() { vec![C::one()] } else { vec![C::one(), e] });
        }
        if let Some(hit) = self.memo.get(&mask) {
            return Some(hit.clone());
        }
        let first = self.g.reach(mask.trailing_zeros() as usize, mask);
        let out = if first != mask {
            let a = self.counts(first)?;
            let b = self.counts(mask & !first)?;
            convolve(&a, &b)?
        } else {
            let pivot = Bits(mask)
                .max_by_key(|&v| ((self.g.neighbors(v) & mask).count_ones(), std::cmp::Reverse(v)))
                .expect("mask is nonempty");
            let rest = mask & !bit(pivot);
            let mut acc = self.counts(rest)?;
            for w in Bits(self.g.neighbors(pivot) & mask) {
                let sub = self.counts(rest & !bit(w))?;
                if acc.len() < sub.len() + 1 {
                    acc.resize(sub.len() + 1, C::zero());
                }
                for (i, c) in sub.iter().enumerate() {
                    acc[i + 1] = acc[i + 1].checked_add(c)?;
                }
            }
            acc
        };
        self.memo.insert(mask, out.clone());
        Some(out)
    }
}

fn convolve<C: Count>(a: &[C], b: &[C]) -> Option<Vec<C>> {
    let mut out = vec![C::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].checked_add(&x.checked_mul(y)?)?;
        }
    }
    Some(out)
}

/// Matching counts of the subgraph induced by `mask`.
pub fn induced_matching_profile(g: &Graph, mask: u64) -> MatchingProfile {
    let mask = mask & g.vertex_mask();
    let order = mask.count_ones() as usize;
    let mut fast = Counter::<u64> {
        g,
        memo: HashMap::new(),
    };
    let counts = match fast.counts(mask) {
        Some(c) => c.into_iter().map(BigUint::from).collect(),
        None => {
            let mut slow = Counter::<BigUint> {
                g,
                memo: HashMap::new(),
            };
            slow.counts(mask).expect("big integers do not overflow")
        }
    };
    MatchingProfile::from_counts(order, counts)
}

pub fn matching_profile(g: &Graph) -> MatchingProfile {
    induced_matching_profile(g, g.vertex_mask())
}

pub fn matching_polynomial(g: &Graph) -> IntPolynomial {
    matching_profile(g).polynomial()
}

/// Checks `m(G, x) = m(G - e, x) - m(G - u - v, x)` for the edge `e = uv`.
pub fn check_deletion_identity(g: &Graph, e: Edge) -> Result<bool, MatchingError> {
    let (u, v) = e;
    if !g.has_edge(u, v) {
        return Err(MatchingError::NotAnEdge(u, v));
    }
    let whole = matching_polynomial(g);
    let deleted = matching_polynomial(&g.without_edge(u, v));
    let removed = induced_matching_profile(g, g.vertex_mask() & !bit(u) & !bit(v)).polynomial();
    Ok(whole == &deleted - &removed)
}

/// Checks that the matching polynomial of a disjoint union is the product of
/// the parts' polynomials.
pub fn check_union_identity(parts: &[Graph]) -> Result<bool, MatchingError> {
    let (first, rest) = parts.split_first().ok_or(MatchingError::NoParts)?;
    let mut union = first.clone();
    let mut product = matching_polynomial(first);
    for part in rest {
        union = union.disjoint_union(part)?;
        product = &product * &matching_polynomial(part);
    }
    Ok(matching_polynomial(&union) == product)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(g: &Graph) -> Vec<u64> {
        matching_profile(g)
            .counts()
            .iter()
            .map(|c| c.try_into().unwrap())
            .collect()
    }

    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn profiles() {
        assert_eq!(counts(&Graph::star(2).unwrap()), vec![1, 2]);
        assert_eq!(counts(&Graph::complete(3).unwrap()), vec![1, 3]);
        assert_eq!(counts(&bowtie()), vec![1, 6, 5]);
        assert_eq!(counts(&Graph::empty(4).unwrap()), vec![1, 0, 0]);
        assert_eq!(matching_profile(&bowtie()).matching_number(), 2);
    }

    #[test]
    fn polynomials() {
        assert_eq!(matching_polynomial(&Graph::star(2).unwrap()).to_string(), "x^3 - 2x");
        assert_eq!(matching_polynomial(&Graph::empty(1).unwrap()).to_string(), "x");
        assert_eq!(matching_polynomial(&bowtie()).to_string(), "x^5 - 6x^3 + 5x");
        assert_eq!(
            matching_profile(&bowtie()).unsigned_polynomial().to_string(),
            "x^5 + 6x^3 + 5x"
        );
    }

    #[test]
    fn counts_beyond_u64_fall_back_to_big_integers() {
        // eight disjoint K8: 764^8 matchings in total, well past u64
        let k8 = Graph::complete(8).unwrap();
        let mut g = k8.clone();
        let mut expected = matching_profile(&k8).unsigned_polynomial();
        let single = expected.clone();
        for _ in 1..8 {
            g = g.disjoint_union(&k8).unwrap();
            expected = &expected * &single;
        }
        let p = matching_profile(&g);
        assert_eq!(p.unsigned_polynomial(), expected);
        let total: BigUint = p.counts().iter().sum();
        assert_eq!(total, BigUint::from(764u32).pow(8));
        assert!(p.counts().iter().any(|c| c > &BigUint::from(u64::MAX)));
    }

    #[test]
    fn identities() {
        let c5 = Graph::cycle(5).unwrap();
        for e in c5.edges() {
            assert!(check_deletion_identity(&c5, e).unwrap());
        }
        let k2 = Graph::complete(2).unwrap();
        assert!(check_deletion_identity(&k2, (0, 1)).unwrap());
        let paw = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        assert!(check_deletion_identity(&paw, (0, 3)).unwrap());
        assert_eq!(
            check_deletion_identity(&paw, (1, 3)),
            Err(MatchingError::NotAnEdge(1, 3))
        );

        assert!(check_union_identity(&[k2.clone(), k2.clone()]).unwrap());
        assert!(check_union_identity(&[Graph::empty(1).unwrap(), paw]).unwrap());
        assert!(check_union_identity(&[Graph::complete(3).unwrap(), Graph::star(2).unwrap()]).unwrap());
        assert_eq!(check_union_identity(&[]), Err(MatchingError::NoParts));
    }
}
