//! Independent oracles shared by the integration tests. None of these call
//! into the library beyond reading adjacency.

#![allow(dead_code)]

use num_complex::Complex64;
use oddcycle::{Graph, IntPolynomial};

/// graph6 from the format description: `chr(63 + n)` (or the `~` escape),
/// then the upper triangle column by column, six bits per byte offset by 63.
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = if n <= 62 {
        vec![63 + n as u8]
    } else {
        vec![
            126,
            63 + (n >> 12) as u8,
            63 + ((n >> 6) & 63) as u8,
            63 + (n & 63) as u8,
        ]
    };
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - k);
            }
        }
        out.push(63 + byte);
    }
    String::from_utf8(out).unwrap()
}

/// Matching counts from every subset of the edge set, keeping the subsets
/// whose edges are pairwise disjoint.
pub fn subset_profile(g: &Graph) -> Vec<u64> {
    let edges = g.edges();
    assert!(edges.len() <= 24, "subset oracle is exponential in m");
    let mut out = vec![0u64; g.order() / 2 + 1];
    for subset in 0u32..1 << edges.len() {
        let mut used = 0u64;
        let mut ok = true;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if subset >> i & 1 == 1 {
                let mask = (1u64 << u) | (1u64 << v);
                ok &= used & mask == 0;
                used |= mask;
            }
        }
        if ok {
            out[subset.count_ones() as usize] += 1;
        }
    }
    out
}

/// Matching counts by extending disjoint edge sets in index order.
pub fn extension_profile(g: &Graph) -> Vec<u64> {
    fn extend(edges: &[(usize, usize)], from: usize, used: u64, size: usize, out: &mut [u64]) {
        out[size] += 1;
        for (i, &(u, v)) in edges.iter().enumerate().skip(from) {
            let mask = (1u64 << u) | (1u64 << v);
            if used & mask == 0 {
                extend(edges, i + 1, used | mask, size + 1, out);
            }
        }
    }
    let mut out = vec![0u64; g.order() / 2 + 1];
    extend(&g.edges(), 0, 0, 0, &mut out);
    out
}

/// `sum_k (-1)^k m_k x^(n-2k)` as plain coefficients, constant term first.
pub fn polynomial_from_counts(n: usize, counts: &[u64]) -> Vec<i64> {
    let mut c = vec![0i64; n + 1];
    for (k, &m) in counts.iter().enumerate() {
        c[n - 2 * k] = if k % 2 == 0 { m as i64 } else { -(m as i64) };
    }
    c
}

/// Lengths of all simple cycles, each cycle once per direction.
pub fn cycle_lengths(g: &Graph) -> Vec<usize> {
    fn walk(g: &Graph, start: usize, at: usize, visited: u64, len: usize, out: &mut Vec<usize>) {
        for w in 0..g.order() {
            if !g.has_edge(at, w) {
                continue;
            }
            if w == start && len >= 3 {
                out.push(len);
            } else if w > start && visited >> w & 1 == 0 {
                walk(g, start, w, visited | 1 << w, len + 1, out);
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.order() {
        walk(g, s, s, 1 << s, 1, &mut out);
    }
    out
}

pub fn every_cycle_is_odd(g: &Graph) -> bool {
    cycle_lengths(g).iter().all(|l| l % 2 == 1)
}

/// Determinant by partial-pivot Gaussian elimination in complex floats.
pub fn complex_det(mut a: Vec<Vec<Complex64>>) -> Complex64 {
    let n = a.len();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))
            .unwrap();
        if a[pivot][col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        let (top, rest) = a.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest {
            let f = row[col] / pivot_row[col];
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= f * p;
            }
        }
    }
    det
}

pub fn eval_complex(coeffs: &[i64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c as f64)
}

pub fn eval_f64(coeffs: &[i64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
}

pub fn to_i64s(p: &IntPolynomial) -> Vec<i64> {
    p.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
}

/// Real roots in `(lo, hi)` found as sign changes on a fine grid, then
/// bisected. Misses double roots, which the callers do not have.
pub fn float_roots(coeffs: &[i64], lo: f64, hi: f64) -> Vec<f64> {
    let steps = 200_000;
    let h = (hi - lo) / steps as f64;
    let mut roots = Vec::new();
    let mut prev = eval_f64(coeffs, lo + h / 2.0);
    for i in 1..steps {
        let x = lo + h / 2.0 + i as f64 * h;
        let cur = eval_f64(coeffs, x);
        if prev.signum() != cur.signum() {
            let (mut a, mut b) = (x - h, x);
            for _ in 0..100 {
                let mid = (a + b) / 2.0;
                if eval_f64(coeffs, mid).signum() == eval_f64(coeffs, a).signum() {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            roots.push((a + b) / 2.0);
        }
        prev = cur;
    }
    roots
}
