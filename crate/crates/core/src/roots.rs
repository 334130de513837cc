//! Real-root isolation with Sturm sequences and exact comparison of real
//! algebraic numbers.
//!
//! An [`AlgebraicRoot`] is a square-free integer polynomial together with a
//! rational interval holding exactly one of its roots. Either the interval is
//! a single rational point that is a root, or both endpoints are non-roots
//! and the root lies strictly inside. Floating-point values are only ever
//! produced for display.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;
use crate::matching::matching_polynomial;
use crate::poly::IntPolynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("the zero polynomial has no isolated roots")]
    ZeroPolynomial,
    #[error("interval is empty: lower endpoint must be below the upper one")]
    EmptyInterval,
    #[error("polynomial {0} has no real root")]
    NoRealRoot(IntPolynomial),
    #[error("precision must be positive")]
    NonPositiveEpsilon,
}

/// `2^-40`, the precision used for reported roots.
pub fn default_eps() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << 40u32)
}

/// The sequence `p, p', -rem(p, p'), ...`, kept integral with pseudo-remainders.
/// Each term is rescaled by a positive constant only, so signs are exact.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    polys: Vec<IntPolynomial>,
}

impl SturmSequence {
    pub fn new(p: &IntPolynomial) -> Result<Self, RootError> {
        if p.is_zero() {
            return Err(RootError::ZeroPolynomial);
        }
        let mut polys = vec![p.primitive_part()];
        let d = p.derivative().primitive_part();
        if !d.is_zero() {
            polys.push(d);
        }
        while polys.len() >= 2 {
            let a = &polys[polys.len() - 2];
            let b = &polys[polys.len() - 1];
            let r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            let delta = a.degree().unwrap_or(0) + 1 - b.degree().unwrap_or(0);
            let lc_negative = b.leading().is_some_and(Signed::is_negative);
            // prem = lc^delta * rem; flip once more when lc^delta < 0
            let next = if lc_negative && delta % 2 == 1 { r } else { -r };
            polys.push(next.primitive_part());
        }
        Ok(SturmSequence { polys })
    }

    pub fn polys(&self) -> &[IntPolynomial] {
        &self.polys
    }

    fn count_changes(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut last = Ordering::Equal;
        let mut changes = 0;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if last != Ordering::Equal && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    pub fn variations(&self, x: &BigRational) -> usize {
        Self::count_changes(self.polys.iter().map(|p| p.sign_at(x)))
    }

    /// Distinct roots of the first term in `(lo, hi]`.
    pub fn count_half_open(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
pub fn sturm_root_count(p: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> Result<usize, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(RootError::EmptyInterval);
    }
    let q = p.square_free_part();
    let seq = SturmSequence::new(&q)?;
    let closed = seq.count_half_open(lo, hi);
    Ok(closed - (q.sign_at(hi) == Ordering::Equal) as usize)
}

/// An integer strictly larger than the modulus of every complex root:
/// `1 + ceil(max |c_i| / |c_deg|)`.
pub fn cauchy_bound(p: &IntPolynomial) -> BigInt {
    let lead = p.leading().map(BigInt::abs).unwrap_or_else(BigInt::one);
    let top = p.coeffs().iter().map(BigInt::abs).max().unwrap_or_default();
    BigInt::one() + Integer::div_ceil(&top, &lead)
}

/// A real algebraic number with a certified isolating interval.
#[derive(Clone)]
pub struct AlgebraicRoot {
    poly: IntPolynomial,
    lo: BigRational,
    hi: BigRational,
    sturm: Arc<SturmSequence>,
}

fn half(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from_integer(BigInt::from(2))
}

impl AlgebraicRoot {
    /// The rational number `r` as the root of `den * x - num`.
    pub fn rational(r: BigRational) -> Self {
        let poly = IntPolynomial::new(vec![-r.numer().clone(), r.denom().clone()]);
        let sturm = Arc::new(SturmSequence::new(&poly).expect("linear polynomial"));
        AlgebraicRoot {
            poly,
            lo: r.clone(),
            hi: r,
            sturm,
        }
    }

    /// Square-free, primitive defining polynomial with positive leading coefficient.
    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// True when the interval has collapsed onto a rational root.
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// Distinct roots of the defining polynomial in the closed interval.
    /// Always 1 for a valid value.
    pub fn certify(&self) -> usize {
        if self.is_exact() {
            return (self.poly.sign_at(&self.lo) == Ordering::Equal) as usize;
        }
        let lo_root = (self.poly.sign_at(&self.lo) == Ordering::Equal) as usize;
        self.sturm.count_half_open(&self.lo, &self.hi) + lo_root
    }

    /// Halves the interval, keeping the root inside.
    pub fn bisect(&mut self) {
        if self.is_exact() {
            return;
        }
        let mid = half(&self.lo, &self.hi);
        match self.poly.sign_at(&mid) {
            Ordering::Equal => {
                self.lo = mid.clone();
                self.hi = mid;
            }
            s if s == self.poly.sign_at(&self.lo) => self.lo = mid,
            _ => self.hi = mid,
        }
    }

    pub fn refine_to(&mut self, eps: &BigRational) {
        while self.width() > *eps {
            self.bisect();
        }
    }

    /// Midpoint of the interval as a float, for display.
    pub fn to_f64(&self) -> f64 {
        half(&self.lo, &self.hi).to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal rendering with `digits` places after the point, from an
    /// interval refined below `10^-(digits+2)`.
    pub fn to_decimal(&self, digits: usize) -> String {
        let mut r = self.clone();
        let scale = num_traits::pow(BigInt::from(10), digits);
        let eps = BigRational::new(BigInt::one(), &scale * BigInt::from(100));
        r.refine_to(&eps);
        let mid = half(&r.lo, &r.hi) * BigRational::from_integer(scale.clone());
        let rounded = mid.round().to_integer();
        let (int, frac) = rounded.abs().div_rem(&scale);
        let sign = if rounded.is_negative() { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac:0>digits$}")
        }
    }

    /// Sign of `q` at this number, decided exactly.
    pub fn sign_of(&self, q: &IntPolynomial) -> Ordering {
        if q.is_zero() {
            return Ordering::Equal;
        }
        if self.is_exact() {
            return q.sign_at(&self.lo);
        }
        let g = self.poly.gcd(q);
        if g.degree().unwrap_or(0) > 0 {
            let seq = SturmSequence::new(&g).expect("nonzero gcd");
            if seq.count_half_open(&self.lo, &self.hi) > 0 {
                return Ordering::Equal;
            }
        }
        let qs = q.square_free_part();
        let seq = SturmSequence::new(&qs).expect("nonzero");
        let mut r = self.clone();
        loop {
            if r.is_exact() {
                return q.sign_at(&r.lo);
            }
            let clean = qs.sign_at(&r.lo) != Ordering::Equal
                && qs.sign_at(&r.hi) != Ordering::Equal
                && seq.count_half_open(&r.lo, &r.hi) == 0;
            if clean {
                return q.sign_at(&r.hi);
            }
            r.bisect();
        }
    }

    /// Exact comparison with a rational number.
    pub fn cmp_rational(&self, x: &BigRational) -> Ordering {
        compare_roots(self, &AlgebraicRoot::rational(x.clone()))
    }
}

impl fmt::Debug for AlgebraicRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "root of {} in [{}, {}] (~{})",
            self.poly,
            self.lo,
            self.hi,
            self.to_f64()
        )
    }
}

impl Serialize for AlgebraicRoot {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AlgebraicRoot", 3)?;
        st.serialize_field("polynomial", &self.poly)?;
        st.serialize_field("lo", &self.lo.to_string())?;
        st.serialize_field("hi", &self.hi.to_string())?;
        st.end()
    }
}

/// The largest real root of `p`, isolated to an interval of width at most
/// `eps`. The search starts from the Cauchy bracket and narrows with Sturm
/// counts until a single root remains, then bisects on sign changes.
pub fn max_real_root(p: &IntPolynomial, eps: &BigRational) -> Result<AlgebraicRoot, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if !eps.is_positive() {
        return Err(RootError::NonPositiveEpsilon);
    }
    let poly = p.square_free_part();
    let sturm = SturmSequence::new(&poly)?;
    let bound = BigRational::from_integer(cauchy_bound(&poly));
    let mut lo = -bound.clone();
    let mut hi = bound;
    if sturm.count_half_open(&lo, &hi) == 0 {
        return Err(RootError::NoRealRoot(p.clone()));
    }
    // invariant: the largest root is in (lo, hi) and neither endpoint is a root
    while sturm.count_half_open(&lo, &hi) > 1 {
        let mid = half(&lo, &hi);
        let split = if poly.sign_at(&mid) == Ordering::Equal {
            if sturm.count_half_open(&mid, &hi) == 0 {
                lo = mid.clone();
                hi = mid;
                break;
            }
            nudge_off_root(&poly, &mid, &hi)
        } else {
            mid
        };
        if sturm.count_half_open(&split, &hi) >= 1 {
            lo = split;
        } else {
            hi = split;
        }
    }
    let mut root = AlgebraicRoot {
        poly,
        lo,
        hi,
        sturm: Arc::new(sturm),
    };
    root.refine_to(eps);
    Ok(root)
}

/// A point in `(root, hi)` that is not a root, approaching `root`.
fn nudge_off_root(p: &IntPolynomial, root: &BigRational, hi: &BigRational) -> BigRational {
    let mut step = (hi - root) / BigRational::from_integer(BigInt::from(4));
    loop {
        let x = root + &step;
        if p.sign_at(&x) != Ordering::Equal {
            return x;
        }
        step /= BigRational::from_integer(BigInt::from(2));
    }
}

/// `t(G)`, the largest root of the matching polynomial. Edgeless graphs give
/// the exact root 0.
pub fn max_matching_root(g: &Graph, eps: &BigRational) -> AlgebraicRoot {
    max_real_root(&matching_polynomial(g), eps).expect("matching polynomials have real roots")
}

/// Exact ordering of two algebraic numbers. Intervals are refined until they
/// separate; if they keep overlapping, a common root of the two defining
/// polynomials inside the overlap settles equality.
pub fn compare_roots(a: &AlgebraicRoot, b: &AlgebraicRoot) -> Ordering {
    let mut a = a.clone();
    let mut b = b.clone();
    let mut common: Option<Option<SturmSequence>> = None;
    loop {
        match (a.is_exact(), b.is_exact()) {
            (true, true) => return a.lo.cmp(&b.lo),
            (true, false) => {
                if a.lo <= b.lo {
                    return Ordering::Less;
                }
                if a.lo >= b.hi {
                    return Ordering::Greater;
                }
                if b.poly.sign_at(&a.lo) == Ordering::Equal {
                    return Ordering::Equal;
                }
                b.bisect();
                continue;
            }
            (false, true) => return compare_roots(&b, &a).reverse(),
            (false, false) => {}
        }
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        let shared = common.get_or_insert_with(|| {
            let g = a.poly.gcd(&b.poly);
            (g.degree().unwrap_or(0) > 0).then(|| SturmSequence::new(&g).expect("nonzero"))
        });
        if let Some(seq) = shared {
            let lo = (&a.lo).max(&b.lo);
            let hi = (&a.hi).min(&b.hi);
            // endpoints come from a or b, so they are not roots of the gcd
            if seq.count_half_open(lo, hi) > 0 {
                return Ordering::Equal;
            }
        }
        a.bisect();
        b.bisect();
    }
}
