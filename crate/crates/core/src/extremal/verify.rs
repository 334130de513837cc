//! Exhaustive verification sweeps. Each returns a [`VerificationReport`]
//! whose counterexample list is empty exactly when the checked statement held
//! on the whole universe.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::enumerate::{connected_odd_cacti, fold_all_labeled, fold_labeled, odd_cycle_graph_classes, ClassSet};
use super::{extremal_graph, max_odd_cycle_edges, saturated_extremal_graph, ExtremalError};
use crate::exec::Execution;
use crate::graph::{automorphism_count, is_isomorphic, is_odd_cycle_graph, long_odd_cycles, Graph};
use crate::kelmans::{
    dominance_of_polynomials, kelmans_transform, reduce_to_extremal, DominanceVerdict, ReductionPhase,
};
use crate::matching::{matching_profile, MatchingProfile};
use crate::poly::IntPolynomial;
use crate::roots::{compare_roots, default_eps, max_real_root, AlgebraicRoot};
use crate::skew::{radius_from_char_poly, skew_char_poly_mask};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// graph6 of the offending graph, or a description when no single graph
    /// is at fault.
    pub witness: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub label: String,
    pub graph6: String,
    pub value: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub universe: String,
    pub cases: u64,
    pub counterexamples: Vec<Counterexample>,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    fn new(check: &str, universe: String) -> Self {
        VerificationReport {
            check: check.to_string(),
            universe,
            cases: 0,
            counterexamples: Vec::new(),
            witnesses: Vec::new(),
            notes: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Concatenates two reports for the same check over disjoint universes.
    pub fn merge(mut self, other: VerificationReport) -> Self {
        if self.universe != other.universe {
            self.universe = format!("{}; {}", self.universe, other.universe);
        }
        self.cases += other.cases;
        self.counterexamples.extend(other.counterexamples);
        self.witnesses.extend(other.witnesses);
        self.notes.extend(other.notes);
        self.elapsed_ms += other.elapsed_ms;
        self
    }

    fn fail(&mut self, witness: impl Into<String>, detail: impl Into<String>) {
        self.counterexamples.push(Counterexample {
            witness: witness.into(),
            detail: detail.into(),
        });
    }

    fn witness(&mut self, label: impl Into<String>, g: &Graph, value: impl Into<String>) {
        self.witnesses.push(Witness {
            label: label.into(),
            graph6: g.to_graph6(),
            value: value.into(),
        });
    }

    fn finish(mut self, started: Instant) -> Self {
        self.elapsed_ms = started.elapsed().as_millis() as u64;
        self
    }
}

const DIGITS: usize = 10;

fn size_of(p: &MatchingProfile) -> usize {
    p.counts().get(1).and_then(|c| c.to_usize()).unwrap_or(0)
}

fn t_of(p: &MatchingProfile) -> AlgebraicRoot {
    max_real_root(&p.polynomial(), &default_eps()).expect("matching polynomials have real roots")
}

fn sqrt_of(k: usize) -> AlgebraicRoot {
    let p = IntPolynomial::new(vec![-BigInt::from(k), BigInt::from(0), BigInt::from(1)]);
    max_real_root(&p, &default_eps()).expect("x^2 - k has real roots")
}

fn padded(g: Graph, n: usize) -> Graph {
    let k = n - g.order();
    if k == 0 {
        g
    } else {
        g.with_isolated(k).expect("order at most n")
    }
}

/// The maximizers of `t` among odd-cycle graphs of order `n` and size `m`,
/// one graph per isomorphism class:
///
/// - `m = 1`: `K2` plus isolated vertices (every such graph has `t = 1`);
/// - `m = 2`: `K_{1,2}` plus isolated vertices;
/// - `m = 3`: `K3` plus isolated vertices, and `K_{1,3}` plus isolated
///   vertices when `n >= 4`;
/// - `4 <= m <= n - 2`: the star `K_{1,m} = F(m+1, m)` plus isolated vertices;
/// - `m >= n - 1`: `F(n, m)`.
pub fn expected_maximizers(n: usize, m: usize) -> Result<Vec<Graph>, ExtremalError> {
    let hi = max_odd_cycle_edges(n);
    if m == 0 || m > hi {
        return Err(ExtremalError::SizeOutOfRange { n, m, lo: 1, hi });
    }
    Ok(match m {
        1..=2 => vec![padded(Graph::star(m)?, n)],
        3 => {
            let mut out = vec![padded(Graph::complete(3)?, n)];
            if n >= 4 {
                out.push(padded(Graph::star(3)?, n));
            }
            out
        }
        _ if m + 2 <= n => vec![padded(Graph::star(m)?, n)],
        _ => vec![extremal_graph(n, m)?],
    })
}

/// Closed-form value of the maximum where one is known: `sqrt(m)` for
/// `m <= n - 2` or `m <= 3`.
fn closed_form(n: usize, m: usize) -> Option<usize> {
    (m <= 3 || m + 2 <= n).then_some(m)
}

type Census = HashMap<MatchingProfile, u64>;

fn census(n: usize, exec: Execution) -> Result<Census, ExtremalError> {
    fold_labeled(
        n,
        false,
        exec,
        Census::new,
        |acc, g| *acc.entry(matching_profile(g)).or_insert(0) += 1,
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    )
}

fn maxima(entries: &[(MatchingProfile, AlgebraicRoot)]) -> (AlgebraicRoot, BTreeSet<MatchingProfile>) {
    let mut best = entries[0].1.clone();
    for (_, t) in entries {
        if compare_roots(t, &best) == Ordering::Greater {
            best = t.clone();
        }
    }
    let winners = entries
        .iter()
        .filter(|(_, t)| compare_roots(t, &best) == Ordering::Equal)
        .map(|(p, _)| p.clone())
        .collect();
    (best, winners)
}

/// Classification of the maximizers of `t` for every size (first report) and
/// the overall maximizer for the order (second report), from one census of all
/// labeled odd-cycle graphs on `n <= 9` vertices.
pub fn verify_classification_and_maximum(
    n: usize,
    exec: Execution,
) -> Result<(VerificationReport, VerificationReport), ExtremalError> {
    let started = Instant::now();
    let universe = format!("labeled odd-cycle graphs, n = {n}");
    let mut by_size = VerificationReport::new("extremal-classification", universe.clone());
    let mut overall = VerificationReport::new("order-maximum", universe);

    let census = census(n, exec)?;
    let mut profiles: Vec<MatchingProfile> = census.keys().cloned().collect();
    profiles.sort();
    let roots = exec.map(&profiles, t_of);
    let entries: Vec<(MatchingProfile, AlgebraicRoot)> = profiles.into_iter().zip(roots).collect();
    let total: u64 = census.values().sum();
    by_size.cases = total;
    overall.cases = total;

    let mut groups: BTreeMap<usize, Vec<(MatchingProfile, AlgebraicRoot)>> = BTreeMap::new();
    for e in &entries {
        groups.entry(size_of(&e.0)).or_default().push(e.clone());
    }

    // profile -> (size, expected graphs) for the uniqueness pass
    let mut watched: HashMap<MatchingProfile, Vec<Graph>> = HashMap::new();
    for (&m, group) in &groups {
        if m == 0 {
            continue;
        }
        let expected = expected_maximizers(n, m)?;
        let expected_profiles: BTreeSet<MatchingProfile> = expected.iter().map(matching_profile).collect();
        let (best, winners) = maxima(group);
        if winners != expected_profiles {
            by_size.fail(
                format!("n={n} m={m}"),
                format!(
                    "maximizer profiles {:?} differ from expected {:?}",
                    winners, expected_profiles
                ),
            );
        }
        if let Some(k) = closed_form(n, m) {
            if compare_roots(&best, &sqrt_of(k)) != Ordering::Equal {
                by_size.fail(format!("n={n} m={m}"), format!("max t = {best:?}, expected sqrt({k})"));
            }
        }
        if m == 1 && group.len() != 1 {
            by_size.fail(format!("n={n} m=1"), "graphs with one edge have different t");
        }
        if m + 1 == n && m >= 4 {
            let star = padded(Graph::star(m)?, n);
            if !is_isomorphic(&star, &extremal_graph(n, m)?)? {
                by_size.fail(
                    format!("n={n} m={m}"),
                    "star and F(n, n-1) disagree at the case boundary",
                );
            }
        }
        for g in &expected {
            by_size.witness(format!("n={n} m={m}"), g, best.to_decimal(DIGITS));
        }
        for p in winners {
            watched.entry(p).or_default().extend(expected.iter().cloned());
        }
    }

    let (best, winners) = maxima(&entries);
    let h = saturated_extremal_graph(n)?;
    let h_profile = matching_profile(&h);
    if winners.len() != 1 || !winners.contains(&h_profile) {
        overall.fail(
            format!("n={n}"),
            format!("overall maximizer profiles {winners:?}, expected that of H_{n}"),
        );
    }
    overall.witness(format!("H_{n}"), &h, best.to_decimal(DIGITS));
    for p in &winners {
        let e = watched.entry(p.clone()).or_default();
        if !e.contains(&h) {
            e.push(h.clone());
        }
    }

    // every labeled graph sharing a maximizer profile must be a maximizer
    let misses = fold_labeled(
        n,
        false,
        exec,
        Vec::new,
        |acc: &mut Vec<(String, MatchingProfile)>, g| {
            let p = matching_profile(g);
            if let Some(expected) = watched.get(&p) {
                let ok = expected.iter().any(|e| is_isomorphic(e, g).expect("n <= 9"));
                if !ok {
                    acc.push((g.to_graph6(), p));
                }
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    for (g6, p) in misses {
        let m = size_of(&p);
        if winners.contains(&p) {
            overall.fail(g6.clone(), format!("attains the maximum for n={n} but is not H_{n}"));
        }
        if m > 0 {
            by_size.fail(
                g6,
                format!("attains the maximum for n={n} m={m} but is not an expected maximizer"),
            );
        }
    }
    Ok((by_size.finish(started), overall.finish(started)))
}

/// Maximizers of `t` for each size among odd-cycle graphs of order `n`.
pub fn verify_extremal_classification(n: usize, exec: Execution) -> Result<VerificationReport, ExtremalError> {
    verify_classification_and_maximum(n, exec).map(|(a, _)| a)
}

/// `H_n` is the unique maximizer of `t` among odd-cycle graphs of order `n`.
pub fn verify_order_maximum(n: usize, exec: Execution) -> Result<VerificationReport, ExtremalError> {
    verify_classification_and_maximum(n, exec).map(|(_, b)| b)
}

/// Strict growth of `t(F(n, m))` in `m` and in `n` over every pair of valid
/// members with order at most `n_max`.
pub fn verify_monotonicity(n_max: usize, exec: Execution) -> Result<VerificationReport, ExtremalError> {
    let started = Instant::now();
    let mut report = VerificationReport::new("monotonicity", format!("F(n, m), 2 <= n <= {n_max}"));
    let grid: Vec<(usize, usize)> = (2..=n_max)
        .flat_map(|n| (n - 1..=max_odd_cycle_edges(n)).map(move |m| (n, m)))
        .collect();
    let roots = exec.map(&grid, |&(n, m)| {
        let g = extremal_graph(n, m).expect("grid points are valid");
        t_of(&matching_profile(&g))
    });
    let t: HashMap<(usize, usize), AlgebraicRoot> = grid.iter().copied().zip(roots).collect();
    let label = |n: usize, m: usize| format!("F({n},{m})");

    for n in 2..=n_max {
        for m in n - 1..max_odd_cycle_edges(n) {
            report.cases += 1;
            if compare_roots(&t[&(n, m)], &t[&(n, m + 1)]) != Ordering::Less {
                report.fail(label(n, m), format!("t(F({n},{m})) is not below t(F({n},{}))", m + 1));
            }
        }
        report.cases += 1;
        if compare_roots(&t[&(n, n - 1)], &sqrt_of(n - 1)) != Ordering::Equal {
            report.fail(label(n, n - 1), format!("t of the star is not sqrt({})", n - 1));
        }
    }

    let mut skipped = Vec::new();
    for m in 4..=max_odd_cycle_edges(n_max) {
        for n in (2 * m + 1).div_ceil(3)..=m {
            if n + 1 > n_max {
                continue;
            }
            let (Some(a), Some(b)) = (t.get(&(n, m)), t.get(&(n + 1, m))) else {
                skipped.push(format!("({n},{m})"));
                continue;
            };
            report.cases += 1;
            let holds = compare_roots(a, b) == Ordering::Less;
            if !holds {
                report.fail(label(n, m), format!("t(F({n},{m})) is not below t(F({},{m}))", n + 1));
            }
            if m == 4 {
                report.notes.push(format!(
                    "m = 4: t(F({n},4)) = {} < t(F({},4)) = {}: {holds}",
                    a.to_decimal(DIGITS),
                    n + 1,
                    b.to_decimal(DIGITS)
                ));
            }
        }
    }
    if !skipped.is_empty() {
        report.notes.push(format!(
            "grid points (n,m) with m > floor(3(n-1)/2), where F(n,m) does not exist, skipped: {}",
            skipped.join(" ")
        ));
    }
    if let Some(r) = t.get(&(5, 6)) {
        report.witness("F(5,6)", &extremal_graph(5, 6)?, r.to_decimal(DIGITS));
    }
    Ok(report.finish(started))
}

fn check_reduction(g: &Graph) -> Result<(Vec<Counterexample>, Option<Witness>), ExtremalError> {
    let (n, m) = (g.order(), g.size());
    let g6 = g.to_graph6();
    let mut out = Vec::new();
    let mut fail = |detail: String| {
        out.push(Counterexample {
            witness: g6.clone(),
            detail,
        })
    };
    let trace = match reduce_to_extremal(g) {
        Ok(t) => t,
        Err(e) => {
            fail(format!("reduction failed: {e}"));
            return Ok((out, None));
        }
    };
    if let Err(e) = trace.validate() {
        fail(e.to_string());
    }
    let long = trace.phase_count(ReductionPhase::LongCycle);
    let lift = trace.phase_count(ReductionPhase::DegreeLift);
    if long > 0 && 2 * long >= m {
        fail(format!("{long} long-cycle steps for {m} edges"));
    }
    if lift > n.saturating_sub(1) {
        fail(format!("{lift} degree-lift steps on {n} vertices"));
    }
    for w in trace.graphs() {
        if !w.is_connected() || !is_odd_cycle_graph(w) || w.size() != m {
            fail(format!(
                "intermediate {} is not a connected odd-cycle graph of size {m}",
                w.to_graph6()
            ));
        }
    }
    let mut prev = trace.start().clone();
    let mut seen_lift = false;
    for s in trace.steps() {
        match s.phase {
            ReductionPhase::LongCycle => {
                if seen_lift {
                    fail("long-cycle step after a degree-lift step".into());
                }
                let before = long_odd_cycles(&prev).expect("checked odd-cycle");
                let after = long_odd_cycles(&s.result).expect("checked odd-cycle");
                if after.total_edges() + 2 > before.total_edges() {
                    fail(format!(
                        "long-cycle edges {} -> {}",
                        before.total_edges(),
                        after.total_edges()
                    ));
                }
                if after.len() > before.len() || after.len() + 1 < before.len() {
                    fail(format!("long-cycle count {} -> {}", before.len(), after.len()));
                }
            }
            ReductionPhase::DegreeLift => {
                seen_lift = true;
                let u = s.step.beneficiary();
                if s.result.degree(u) <= prev.degree(u) {
                    fail(format!("beneficiary {u} did not gain degree"));
                }
            }
        }
        prev = s.result.clone();
    }
    if n == 1 {
        return Ok((out, None));
    }
    let f = extremal_graph(n, m)?;
    if !is_isomorphic(trace.final_graph(), &f)? {
        fail(format!(
            "final graph {} is not F({n},{m})",
            trace.final_graph().to_graph6()
        ));
    }
    let (pf, pg) = (matching_profile(&f), matching_profile(g));
    let verdict = dominance_of_polynomials(&pf.polynomial(), &pg.polynomial()).verdict;
    let (tf, tg) = (t_of(&pf), t_of(&pg));
    if is_isomorphic(g, &f)? {
        if verdict != DominanceVerdict::EqualPolynomials {
            fail(format!("F({n},{m}) against itself gave {verdict}"));
        }
    } else {
        if verdict != DominanceVerdict::StrictlyDominates {
            fail(format!("F({n},{m}) against the input gave {verdict}"));
        }
        if compare_roots(&tf, &tg) != Ordering::Greater {
            fail(format!("t(F({n},{m})) is not above t(G)"));
        }
    }
    let witness = Witness {
        label: format!("{} long-cycle + {} degree-lift steps", long, lift),
        graph6: g.to_graph6(),
        value: tg.to_decimal(DIGITS),
    };
    Ok((out, Some(witness)))
}

/// Reduction of every connected odd-cycle graph on `n` vertices (one per
/// isomorphism class) to `F(n, m)`, with the per-step invariants.
pub fn verify_reduction(n: usize, exec: Execution) -> Result<VerificationReport, ExtremalError> {
    let started = Instant::now();
    let mut report = VerificationReport::new("reduction", format!("connected odd cacti, n = {n}"));
    let classes = connected_odd_cacti(n)?.swap_remove(n);
    let results = exec.map(&classes, check_reduction);
    report.cases = classes.len() as u64;
    let mut longest: Option<Witness> = None;
    for r in results {
        let (cex, w) = r?;
        report.counterexamples.extend(cex);
        if let Some(w) = w {
            if longest.as_ref().is_none_or(|l| w.label > l.label) {
                longest = Some(w);
            }
        }
    }
    report.witnesses.extend(longest);
    Ok(report.finish(started))
}

type PairKey = (MatchingProfile, MatchingProfile);

/// After any Kelmans transformation of a connected graph on at most `n_max`
/// vertices, the result dominates the input, strictly unless isomorphic.
pub fn verify_kelmans_dominance(n_max: usize, exec: Execution) -> Result<VerificationReport, ExtremalError> {
    let started = Instant::now();
    let mut report = VerificationReport::new(
        "kelmans-dominance",
        format!("connected labeled graphs, n <= {n_max}, all ordered pairs (u, v)"),
    );
    let transforms = |g: &Graph| {
        let n = g.order();
        (0..n).flat_map(move |u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
    };
    let merge_sets = |mut a: HashSet<PairKey>, b: HashSet<PairKey>| {
        a.extend(b);
        a
    };
    let mut pairs = HashSet::new();
    for n in 1..=n_max {
        let found = fold_all_labeled(
            n,
            true,
            exec,
            HashSet::new,
            |acc, g| {
                let pg = matching_profile(g);
                for (u, v) in transforms(g) {
                    let (h, _) = kelmans_transform(g, u, v).expect("distinct vertices");
                    if h != *g {
                        acc.insert((matching_profile(&h), pg.clone()));
                    }
                }
            },
            merge_sets,
        )?;
        pairs.extend(found);
    }
    let mut pairs: Vec<PairKey> = pairs.into_iter().collect();
    pairs.sort();
    let verdicts = exec.map(&pairs, |(ph, pg)| {
        dominance_of_polynomials(&ph.polynomial(), &pg.polynomial()).verdict
    });
    let verdict: HashMap<&PairKey, DominanceVerdict> = pairs.iter().zip(verdicts).collect();

    let mut tally: BTreeMap<String, u64> = BTreeMap::new();
    for n in 1..=n_max {
        let (counts, cex) = fold_all_labeled(
            n,
            true,
            exec,
            || (BTreeMap::<String, u64>::new(), Vec::<Counterexample>::new()),
            |(counts, cex), g| {
                let pg = matching_profile(g);
                for (u, v) in transforms(g) {
                    let (h, _) = kelmans_transform(g, u, v).expect("distinct vertices");
                    let d = if h == *g {
                        DominanceVerdict::EqualPolynomials
                    } else {
                        verdict[&(matching_profile(&h), pg.clone())]
                    };
                    *counts.entry(d.to_string()).or_insert(0) += 1;
                    let witness = || format!("{} u={u} v={v}", g.to_graph6());
                    if d == DominanceVerdict::Incomparable {
                        cex.push(Counterexample {
                            witness: witness(),
                            detail: "transform is incomparable".into(),
                        });
                    } else if d != DominanceVerdict::StrictlyDominates
                        && h != *g
                        && !is_isomorphic(&h, g).expect("n <= 7")
                    {
                        cex.push(Counterexample {
                            witness: witness(),
                            detail: format!("non-isomorphic transform gave {d}"),
                        });
                    }
                }
            },
            |(mut ca, mut xa), (cb, xb)| {
                for (k, v) in cb {
                    *ca.entry(k).or_insert(0) += v;
                }
                xa.extend(xb);
                (ca, xa)
            },
        )?;
        for (k, v) in counts {
            *tally.entry(k).or_insert(0) += v;
        }
        report.counterexamples.extend(cex);
    }
    report.cases = tally.values().sum();
    report
        .notes
        .push(format!("distinct polynomial pairs decided: {}", pairs.len()));
    for (k, v) in tally {
        report.notes.push(format!("{k}: {v}"));
    }
    Ok(report.finish(started))
}

/// `det(xI - S(G^σ)) = sum_k m_k x^(n-2k)` for every orientation of every
/// odd-cycle graph, and fails for some orientation of every other graph.
pub fn verify_skew_identity(n_max: usize, exec: Execution) -> Result<VerificationReport, ExtremalError> {
    let started = Instant::now();
    let mut report = VerificationReport::new("skew-identity", format!("labeled graphs, n <= {n_max}"));
    #[derive(Default)]
    struct Tally {
        odd: u64,
        other: u64,
        orientations: u64,
        cex: Vec<Counterexample>,
    }
    let mut total = Tally::default();
    for n in 1..=n_max {
        let t = fold_all_labeled(
            n,
            false,
            exec,
            Tally::default,
            |acc, g| {
                let target = matching_profile(g).unsigned_polynomial();
                let edges = g.edges();
                let odd = is_odd_cycle_graph(g);
                let mut violated = None;
                for mask in 0..1u64 << edges.len() {
                    let phi = skew_char_poly_mask(n, &edges, mask);
                    acc.orientations += 1;
                    let parity_ok = (0..=n)
                        .filter(|j| (n - j) % 2 == 1)
                        .all(|j| phi.coeff(j) == BigInt::from(0));
                    let constant = phi.coeff(0);
                    let det_ok = if n % 2 == 0 {
                        constant >= BigInt::from(0)
                    } else {
                        constant == BigInt::from(0)
                    };
                    if !parity_ok || !det_ok {
                        acc.cex.push(Counterexample {
                            witness: format!("{} mask={mask:x}", g.to_graph6()),
                            detail: format!("skew-symmetric structure broken: {phi}"),
                        });
                    }
                    if phi != target {
                        violated = Some((mask, phi));
                        if !odd {
                            break;
                        }
                    }
                    if odd && violated.is_some() {
                        break;
                    }
                }
                match (odd, violated) {
                    (true, Some((mask, phi))) => acc.cex.push(Counterexample {
                        witness: format!("{} mask={mask:x}", g.to_graph6()),
                        detail: format!("odd-cycle graph with {phi} != {target}"),
                    }),
                    (false, None) => acc.cex.push(Counterexample {
                        witness: g.to_graph6(),
                        detail: "graph with an even cycle satisfies the identity for every orientation".into(),
                    }),
                    _ => {}
                }
                if odd {
                    acc.odd += 1;
                } else {
                    acc.other += 1;
                }
            },
            |mut a, b| {
                a.odd += b.odd;
                a.other += b.other;
                a.orientations += b.orientations;
                a.cex.extend(b.cex);
                a
            },
        )?;
        total.odd += t.odd;
        total.other += t.other;
        total.orientations += t.orientations;
        total.cex.extend(t.cex);
    }
    report.cases = total.odd + total.other;
    report.counterexamples = total.cex;
    report.notes.push(format!("odd-cycle graphs: {}", total.odd));
    report.notes.push(format!("graphs with an even cycle: {}", total.other));
    report
        .notes
        .push(format!("orientations evaluated: {}", total.orientations));
    Ok(report.finish(started))
}

/// The skew spectral radius of every orientation of every odd-cycle graph
/// equals its maximum matching root.
pub fn verify_radius_independence(n_max: usize, exec: Execution) -> Result<VerificationReport, ExtremalError> {
    let started = Instant::now();
    let mut report = VerificationReport::new("radius-independence", format!("labeled odd-cycle graphs, n <= {n_max}"));
    let eps = default_eps();
    #[derive(Default)]
    struct Acc {
        graphs: u64,
        orientations: u64,
        /// (profile, char poly) pairs whose radius differs from t
        mismatched: BTreeSet<(MatchingProfile, String, String)>,
        seen: HashMap<(MatchingProfile, IntPolynomial), bool>,
        t: HashMap<MatchingProfile, AlgebraicRoot>,
    }
    for n in 1..=n_max {
        let acc = fold_labeled(
            n,
            false,
            exec,
            Acc::default,
            |acc, g| {
                acc.graphs += 1;
                let p = matching_profile(g);
                let edges = g.edges();
                let t = acc.t.entry(p.clone()).or_insert_with(|| t_of(&p)).clone();
                for mask in 0..1u64 << edges.len() {
                    acc.orientations += 1;
                    let phi = skew_char_poly_mask(n, &edges, mask);
                    let key = (p.clone(), phi);
                    if !acc.seen.contains_key(&key) {
                        let rho = radius_from_char_poly(&key.1, &eps);
                        let equal = compare_roots(&rho, &t) == Ordering::Equal;
                        if !equal {
                            acc.mismatched
                                .insert((p.clone(), g.to_graph6(), format!("mask={mask:x} rho={rho:?}")));
                        }
                        acc.seen.insert(key, equal);
                    }
                }
            },
            |mut a, b| {
                a.graphs += b.graphs;
                a.orientations += b.orientations;
                a.mismatched.extend(b.mismatched);
                a.seen.extend(b.seen);
                a
            },
        )?;
        report.cases += acc.graphs;
        report.notes.push(format!(
            "n = {n}: {} graphs, {} orientations, {} distinct (profile, polynomial) pairs",
            acc.graphs,
            acc.orientations,
            acc.seen.len()
        ));
        for (_, g6, detail) in acc.mismatched {
            report.fail(g6, format!("radius differs from t: {detail}"));
        }
    }
    Ok(report.finish(started))
}

/// Labeled and structured enumeration agree: per size, the labeled graphs
/// fall into exactly the structured isomorphism classes, and the number of
/// labelings equals the sum of `n! / |Aut|` over those classes.
pub fn verify_enumeration_agreement(n_max: usize, exec: Execution) -> Result<VerificationReport, ExtremalError> {
    let started = Instant::now();
    let mut report = VerificationReport::new("enumeration-agreement", format!("odd-cycle graphs, n <= {n_max}"));
    for n in 1..=n_max {
        let factorial: u64 = (1..=n as u64).product();
        for connected_only in [false, true] {
            let (labeled, classes) = fold_labeled(
                n,
                connected_only,
                exec,
                || (BTreeMap::<usize, u64>::new(), ClassSet::default()),
                |(counts, classes), g| {
                    *counts.entry(g.size()).or_insert(0) += 1;
                    classes.insert(g.clone());
                },
                |(mut ca, mut sa), (cb, sb)| {
                    for (k, v) in cb {
                        *ca.entry(k).or_insert(0) += v;
                    }
                    sa.absorb(sb);
                    (ca, sa)
                },
            )?;
            let structured = odd_cycle_graph_classes(n, connected_only)?;
            let mut orbit: BTreeMap<usize, u64> = BTreeMap::new();
            let mut class_count: BTreeMap<usize, u64> = BTreeMap::new();
            for g in &structured {
                *orbit.entry(g.size()).or_insert(0) += factorial / automorphism_count(g)?;
                *class_count.entry(g.size()).or_insert(0) += 1;
            }
            let mut labeled_classes: BTreeMap<usize, u64> = BTreeMap::new();
            for g in classes.graphs() {
                *labeled_classes.entry(g.size()).or_insert(0) += 1;
            }
            let scope = if connected_only { "connected" } else { "all" };
            report.cases += 1;
            if labeled != orbit {
                report.fail(
                    format!("n={n} {scope}"),
                    format!("labeled counts {labeled:?} vs orbit sums {orbit:?}"),
                );
            }
            if labeled_classes != class_count {
                report.fail(
                    format!("n={n} {scope}"),
                    format!("labeled classes {labeled_classes:?} vs structured classes {class_count:?}"),
                );
            }
            report.notes.push(format!(
                "n = {n} {scope}: {} labeled graphs in {} classes",
                labeled.values().sum::<u64>(),
                structured.len()
            ));
        }
    }
    Ok(report.finish(started))
}
