//! Orientations, skew-adjacency characteristic polynomials and skew spectral
//! radii.
//!
//! For an orientation `σ` of `G`, `S(G^σ)` has `s_uv = 1, s_vu = -1` for each
//! arc `u -> v`. The characteristic polynomial `det(xI - S)` is computed by
//! evaluating the determinant at `x = 0, 1, ..., n` with fraction-free
//! elimination and interpolating exactly.
//!
//! For odd-cycle graphs it agrees with `(-i)^n m(G, ix)`. Expanding,
//!
//! ```text
//! (-i)^n m(G, ix) = sum_k (-1)^k m_k (-i)^n i^(n-2k) x^(n-2k)
//!                 = sum_k (-1)^k m_k (-i * i)^n (i^-2)^k x^(n-2k)
//!                 = sum_k m_k x^(n-2k)
//! ```
//!
//! so the identity is checked on integer coefficients against the matching
//! counts with all signs positive.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::exec::Execution;
use crate::graph::{Edge, Graph};
use crate::matching::matching_profile;
use crate::poly::IntPolynomial;
use crate::roots::{compare_roots, max_real_root, AlgebraicRoot};

/// Largest order for exact skew characteristic polynomials.
pub const MAX_SKEW_ORDER: usize = 24;
/// Largest edge count for enumerating every orientation.
pub const MAX_ORIENTATION_EDGES: usize = 24;
/// Largest edge count for the maximum-radius sweep.
pub const MAX_RADIUS_SWEEP_EDGES: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkewError {
    #[error("skew polynomials are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("orientation sweeps are limited to {max} edges, got {m}")]
    TooManyEdges { m: usize, max: usize },
    #[error("orientation mask has bits beyond the {m} edges of the graph")]
    MaskOutOfRange { m: usize },
    #[error("orientation mask is not valid hexadecimal: {0}")]
    BadHex(String),
}

/// Direction of every edge of `base`. Edges are taken in lexicographic order;
/// bit `k` set means the `k`-th edge points from its lower endpoint to its
/// higher one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    base: Graph,
    forward: Vec<u64>,
}

impl Orientation {
    pub fn new(base: Graph, mut forward: Vec<u64>) -> Result<Self, SkewError> {
        let m = base.size();
        let words = m.div_ceil(64);
        if forward.iter().skip(words).any(|&w| w != 0) {
            return Err(SkewError::MaskOutOfRange { m });
        }
        forward.resize(words, 0);
        if !m.is_multiple_of(64) {
            if let Some(last) = forward.last() {
                if last >> (m % 64) != 0 {
                    return Err(SkewError::MaskOutOfRange { m });
                }
            }
        }
        Ok(Orientation { base, forward })
    }

    pub fn from_mask(base: Graph, mask: u64) -> Result<Self, SkewError> {
        Self::new(base, vec![mask])
    }

    pub fn from_hex(base: Graph, hex: &str) -> Result<Self, SkewError> {
        let hex = hex.trim().trim_start_matches("0x");
        let value = BigInt::parse_bytes(hex.as_bytes(), 16)
            .filter(|v| *v >= BigInt::zero())
            .ok_or_else(|| SkewError::BadHex(hex.to_string()))?;
        let (_, digits) = value.to_u64_digits();
        Self::new(base, digits)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn is_forward(&self, k: usize) -> bool {
        self.forward[k / 64] >> (k % 64) & 1 == 1
    }

    /// Edge-order bitmask in hexadecimal, most significant word first.
    pub fn mask_hex(&self) -> String {
        let mut digits = self.forward.clone();
        while digits.len() > 1 && digits.last() == Some(&0) {
            digits.pop();
        }
        let mut out = format!("{:x}", digits.last().copied().unwrap_or(0));
        for w in digits.iter().rev().skip(1) {
            out.push_str(&format!("{w:016x}"));
        }
        out
    }

    /// Arcs as `(tail, head)` in edge order.
    pub fn arcs(&self) -> Vec<Edge> {
        self.base
            .edges()
            .into_iter()
            .enumerate()
            .map(|(k, (u, v))| if self.is_forward(k) { (u, v) } else { (v, u) })
            .collect()
    }

    pub fn skew_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.base.order();
        let mut s = vec![vec![0i64; n]; n];
        for (a, b) in self.arcs() {
            s[a][b] = 1;
            s[b][a] = -1;
        }
        s
    }
}

/// All `2^m` orientations in mask order.
pub fn all_orientations(g: &Graph) -> Result<impl Iterator<Item = Orientation> + '_, SkewError> {
    let m = g.size();
    if m > MAX_ORIENTATION_EDGES {
        return Err(SkewError::TooManyEdges {
            m,
            max: MAX_ORIENTATION_EDGES,
        });
    }
    Ok((0..1u64 << m).map(move |mask| Orientation {
        base: g.clone(),
        forward: vec![mask],
    }))
}

/// Integers with exact, possibly failing arithmetic: `i128` reports overflow,
/// `BigInt` never fails.
trait ExactRing: Clone + PartialEq + Sized {
    fn from_i64(v: i64) -> Self;
    fn vanishes(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    /// Division known to be exact.
    fn div(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl ExactRing for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn vanishes(&self) -> bool {
        *self == 0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        debug_assert_eq!(self % o, 0);
        self.checked_div(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl ExactRing for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        debug_assert!(Zero::is_zero(&(self % o)));
        Some(self / o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Bareiss elimination with row swaps; every division is exact.
fn bareiss_det<T: ExactRing>(mut a: Vec<Vec<T>>) -> Option<T> {
    let n = a.len();
    if n == 0 {
        return Some(T::from_i64(1));
    }
    let mut negate = false;
    let mut prev = T::from_i64(1);
    for k in 0..n - 1 {
        if a[k][k].vanishes() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].vanishes()) else {
                return Some(T::from_i64(0));
            };
            a.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].mul(&a[k][k])?.sub(&a[i][k].mul(&a[k][j])?)?;
                a[i][j] = t.div(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        Some(d)
    }
}

/// Coefficients of the degree-`n` polynomial taking `values[k]` at `x = k`.
/// Newton forward differences give `p = sum_j d_j C(x, j)`; multiplying by
/// `n!` keeps every intermediate integral.
fn interpolate<T: ExactRing>(values: &[T]) -> Option<Vec<T>> {
    let n = values.len() - 1;
    let mut diffs = values.to_vec();
    let mut lead = Vec::with_capacity(n + 1);
    for j in 0..=n {
        lead.push(diffs[0].clone());
        for i in 0..n - j {
            diffs[i] = diffs[i + 1].sub(&diffs[i])?;
        }
    }
    // falling[i] holds x(x-1)...(x-j+1); scale[j] = n!/j!
    let mut falling = vec![T::from_i64(0); n + 1];
    falling[0] = T::from_i64(1);
    let mut scale = vec![T::from_i64(1); n + 1];
    for j in (0..n).rev() {
        scale[j] = scale[j + 1].mul(&T::from_i64(j as i64 + 1))?;
    }
    let mut acc = vec![T::from_i64(0); n + 1];
    for (j, d) in lead.iter().enumerate() {
        if j > 0 {
            // multiply falling by (x - (j-1))
            let shift = T::from_i64(j as i64 - 1);
            for i in (0..=j).rev() {
                let below = if i > 0 { falling[i - 1].clone() } else { T::from_i64(0) };
                falling[i] = below.sub(&falling[i].mul(&shift)?)?;
            }
        }
        let w = d.mul(&scale[j])?;
        for i in 0..=j {
            acc[i] = acc[i].add(&falling[i].mul(&w)?)?;
        }
    }
    let nf = &scale[0];
    acc.iter().map(|c| c.div(nf)).collect()
}

fn char_poly_exact<T: ExactRing>(s: &[Vec<i64>]) -> Option<Vec<T>> {
    let n = s.len();
    let values = (0..=n as i64)
        .map(|k| {
            let m = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| T::from_i64(if i == j { k } else { 0 } - s[i][j]))
                        .collect()
                })
                .collect();
            bareiss_det(m)
        })
        .collect::<Option<Vec<T>>>()?;
    interpolate(&values)
}

/// `det(xI - M)` for a small integer matrix.
pub(crate) fn char_poly_of(s: &[Vec<i64>]) -> IntPolynomial {
    if let Some(c) = char_poly_exact::<i128>(s) {
        return IntPolynomial::new(c.iter().map(ExactRing::to_big).collect());
    }
    let c = char_poly_exact::<BigInt>(s).expect("big integers do not overflow");
    IntPolynomial::new(c)
}

fn skew_matrix_for(n: usize, edges: &[Edge], mask: u64) -> Vec<Vec<i64>> {
    let mut s = vec![vec![0i64; n]; n];
    for (k, &(u, v)) in edges.iter().enumerate() {
        let (a, b) = if mask >> k & 1 == 1 { (u, v) } else { (v, u) };
        s[a][b] = 1;
        s[b][a] = -1;
    }
    s
}

/// `det(xI - S(G^σ))`.
pub fn skew_char_poly(o: &Orientation) -> Result<IntPolynomial, SkewError> {
    let n = o.base.order();
    if n > MAX_SKEW_ORDER {
        return Err(SkewError::TooManyVertices { n, max: MAX_SKEW_ORDER });
    }
    Ok(char_poly_of(&o.skew_matrix()))
}

/// Characteristic polynomial for a one-word orientation mask over `edges`
/// (the lexicographic edge list of a graph on `n` vertices).
pub(crate) fn skew_char_poly_mask(n: usize, edges: &[Edge], mask: u64) -> IntPolynomial {
    char_poly_of(&skew_matrix_for(n, edges, mask))
}

/// Whether `det(xI - S(G^σ))` equals `sum_k m_k(G) x^(n-2k)`.
pub fn verify_identity(o: &Orientation) -> Result<bool, SkewError> {
    let phi = skew_char_poly(o)?;
    Ok(phi == matching_profile(&o.base).unsigned_polynomial())
}

/// Eigenvalues of a real skew-symmetric matrix are `±iλ`. Substituting
/// `x = iλ` gives `φ(iλ) = i^n q(λ)` with `q(λ) = sum (-1)^((n-j)/2) c_j λ^j`,
/// whose largest real root is the spectral radius.
pub fn radius_polynomial(phi: &IntPolynomial) -> IntPolynomial {
    let n = phi.degree().unwrap_or(0);
    IntPolynomial::new(
        (0..=n)
            .map(|j| {
                let c = phi.coeff(j);
                match (n - j) % 4 {
                    0 => c,
                    2 => -c,
                    _ => BigInt::zero(),
                }
            })
            .collect(),
    )
}

pub fn radius_from_char_poly(phi: &IntPolynomial, eps: &BigRational) -> AlgebraicRoot {
    max_real_root(&radius_polynomial(phi), eps).expect("skew-symmetric matrices have purely imaginary eigenvalues")
}

/// `ρ(G^σ)`, the largest modulus of an eigenvalue of `S(G^σ)`.
pub fn skew_spectral_radius(o: &Orientation, eps: &BigRational) -> Result<AlgebraicRoot, SkewError> {
    Ok(radius_from_char_poly(&skew_char_poly(o)?, eps))
}

/// `ρ_s(G)`: the largest skew spectral radius over all orientations.
pub fn max_skew_spectral_radius(g: &Graph, eps: &BigRational) -> Result<AlgebraicRoot, SkewError> {
    max_skew_spectral_radius_with(g, eps, Execution::default())
}

pub fn max_skew_spectral_radius_with(
    g: &Graph,
    eps: &BigRational,
    exec: Execution,
) -> Result<AlgebraicRoot, SkewError> {
    let (n, m) = (g.order(), g.size());
    if m > MAX_RADIUS_SWEEP_EDGES {
        return Err(SkewError::TooManyEdges {
            m,
            max: MAX_RADIUS_SWEEP_EDGES,
        });
    }
    if n > MAX_SKEW_ORDER {
        return Err(SkewError::TooManyVertices { n, max: MAX_SKEW_ORDER });
    }
    let edges = g.edges();
    let total = 1u64 << m;
    let chunk = (total / 64).max(1);
    let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
    let parts = exec.map(&starts, |&start| {
        (start..(start + chunk).min(total))
            .map(|mask| skew_char_poly_mask(n, &edges, mask))
            .collect::<HashSet<_>>()
    });
    let mut distinct: Vec<IntPolynomial> = parts
        .into_iter()
        .flatten()
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    // a fixed order keeps the reported interval independent of scheduling
    distinct.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
    let radii = exec.map(&distinct, |phi| radius_from_char_poly(phi, eps));
    Ok(radii
        .into_iter()
        .reduce(|best, r| {
            if compare_roots(&r, &best) == Ordering::Greater {
                r
            } else {
                best
            }
        })
        .expect("at least one orientation"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{default_eps, max_matching_root};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn determinant_and_interpolation() {
        let m = vec![vec![2i128, 1, 0], vec![1, 3, 1], vec![0, 1, 4]];
        assert_eq!(bareiss_det(m), Some(18));
        // zero pivot needing a swap
        let m = vec![vec![0i128, 1], vec![1, 0]];
        assert_eq!(bareiss_det(m), Some(-1));
        // x^3 - 2x + 5 at 0..=3
        let vals: Vec<i128> = (0..4).map(|x: i128| x * x * x - 2 * x + 5).collect();
        assert_eq!(interpolate(&vals), Some(vec![5, -2, 0, 1]));
    }

    #[test]
    fn small_char_polys() {
        let k2 = Graph::complete(2).unwrap();
        let o = Orientation::from_mask(k2, 1).unwrap();
        assert_eq!(skew_char_poly(&o).unwrap(), p(&[1, 0, 1]));
        let k3 = Graph::complete(3).unwrap();
        for o in all_orientations(&k3).unwrap() {
            assert_eq!(skew_char_poly(&o).unwrap(), p(&[0, 3, 0, 1]));
        }
    }

    #[test]
    fn c4_depends_on_orientation() {
        // edges (0,1) (0,3) (1,2) (2,3); 0->1->2->3->0 leaves (0,3) backward
        let c4 = Graph::cycle(4).unwrap();
        let around = Orientation::from_mask(c4.clone(), 0b1101).unwrap();
        assert_eq!(around.arcs(), vec![(0, 1), (3, 0), (1, 2), (2, 3)]);
        assert_eq!(skew_char_poly(&around).unwrap(), p(&[0, 0, 4, 0, 1]));
        let flipped = Orientation::from_mask(c4.clone(), 0b1100).unwrap();
        assert_eq!(skew_char_poly(&flipped).unwrap(), p(&[4, 0, 4, 0, 1]));
        assert!(!verify_identity(&around).unwrap());
        assert!(!verify_identity(&flipped).unwrap());
        assert_eq!(
            max_skew_spectral_radius(&c4, &default_eps())
                .unwrap()
                .cmp_rational(&BigRational::from_integer(2.into())),
            Ordering::Equal
        );
    }

    #[test]
    fn identity_and_radius_on_odd_cycle_graphs() {
        for o in all_orientations(&bowtie()).unwrap() {
            assert!(verify_identity(&o).unwrap());
        }
        let k1 = Orientation::from_mask(Graph::empty(1).unwrap(), 0).unwrap();
        assert!(verify_identity(&k1).unwrap());
        assert_eq!(skew_char_poly(&k1).unwrap(), p(&[0, 1]));
        let eps = default_eps();
        let t = max_matching_root(&bowtie(), &eps);
        let o = Orientation::from_mask(bowtie(), 0b101010).unwrap();
        assert_eq!(
            compare_roots(&skew_spectral_radius(&o, &eps).unwrap(), &t),
            Ordering::Equal
        );
        let k3 = Orientation::from_mask(Graph::complete(3).unwrap(), 0).unwrap();
        let r = skew_spectral_radius(&k3, &eps).unwrap();
        assert!((r.to_f64() - 3f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn orientation_counts_and_limits() {
        assert_eq!(all_orientations(&Graph::complete(2).unwrap()).unwrap().count(), 2);
        assert_eq!(all_orientations(&Graph::complete(3).unwrap()).unwrap().count(), 8);
        assert_eq!(all_orientations(&Graph::path(3).unwrap()).unwrap().count(), 4);
        let big = Graph::complete(8).unwrap();
        assert!(matches!(
            all_orientations(&big),
            Err(SkewError::TooManyEdges { m: 28, .. })
        ));
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(
            Orientation::from_mask(k3.clone(), 8),
            Err(SkewError::MaskOutOfRange { m: 3 })
        );
        let o = Orientation::from_hex(k3.clone(), "5").unwrap();
        assert_eq!(o.mask_hex(), "5");
        assert!(matches!(Orientation::from_hex(k3, "zz"), Err(SkewError::BadHex(_))));
    }

    #[test]
    fn wide_masks_round_trip_through_hex() {
        let g = Graph::complete(12).unwrap(); // 66 edges
        let o = Orientation::new(g.clone(), vec![u64::MAX, 0b11]).unwrap();
        assert_eq!(o.mask_hex(), "3ffffffffffffffff");
        assert_eq!(Orientation::from_hex(g.clone(), &o.mask_hex()).unwrap(), o);
        assert!(Orientation::new(g, vec![0, 0b100]).is_err());
    }

    #[test]
    fn big_integer_fallback() {
        // K24 with a tournament orientation overflows the i128 path
        let g = Graph::complete(24).unwrap();
        let o = Orientation::new(
            g,
            vec![
                0x5555_5555_5555_5555,
                0x5555_5555_5555_5555,
                0x5555_5555_5555_5555,
                0x5555_5555_5555_5555,
                0x5555,
            ],
        )
        .unwrap();
        let phi = skew_char_poly(&o).unwrap();
        assert!(phi.is_monic());
        assert_eq!(phi.degree(), Some(24));
        // sum of squared entries / 2 = number of edges
        assert_eq!(phi.coeff(22), BigInt::from(276));
        assert!((0..24).step_by(2).all(|j| phi.coeff(j + 1).is_zero()));
        assert!(phi.coeff(0) >= BigInt::zero());
    }
}
