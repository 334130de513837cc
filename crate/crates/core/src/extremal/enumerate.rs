//! Odd-cycle graph enumeration.
//!
//! *Labeled* mode walks the vertex pairs in lexicographic order and decides
//! each one in turn. Having no even cycle is inherited by subgraphs, so a
//! branch is cut as soon as an added edge closes an even cycle or exceeds the
//! edge cap. The first few decisions form independent shards.
//!
//! *Structured* mode builds connected odd cacti up to isomorphism by gluing a
//! pendant edge or an odd cycle onto a vertex of a smaller one. Every cactus
//! with a cycle or an edge has a leaf block, so this reaches all of them.

use std::collections::HashMap;

use super::{max_odd_cycle_edges, ExtremalError};
use crate::exec::Execution;
use crate::graph::{invariant_key, is_isomorphic, is_odd_cycle_graph, Edge, Graph, GraphInvariant};

pub const MAX_LABELED_ORDER: usize = 9;
pub const MAX_STRUCTURED_ORDER: usize = 11;

/// Pair decisions fixed per shard.
const SHARD_DEPTH: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnumerationMode {
    Labeled,
    Structured,
}

fn lex_pairs(n: usize) -> Vec<Edge> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

struct LabeledSearch<'a, F> {
    pairs: &'a [Edge],
    cap: usize,
    connected_only: bool,
    visit: F,
}

impl<F: FnMut(&Graph)> LabeledSearch<'_, F> {
    fn run(&mut self, g: &mut Graph, m: usize, k: usize) {
        if k == self.pairs.len() {
            if !self.connected_only || g.is_connected() {
                (self.visit)(g);
            }
            return;
        }
        self.run(g, m, k + 1);
        if m < self.cap {
            let (u, v) = self.pairs[k];
            g.insert_edge(u, v);
            if is_odd_cycle_graph(g) {
                self.run(g, m + 1, k + 1);
            }
            g.delete_edge(u, v);
        }
    }
}

fn check_labeled(n: usize) -> Result<(), ExtremalError> {
    if n > MAX_LABELED_ORDER {
        return Err(ExtremalError::OrderTooLarge {
            n,
            max: MAX_LABELED_ORDER,
        });
    }
    Graph::empty(n)?;
    Ok(())
}

/// Valid shard prefixes: the graphs formed by the first `depth` pairs.
fn shard_roots(n: usize, pairs: &[Edge]) -> Vec<(Graph, usize)> {
    let depth = pairs.len().min(SHARD_DEPTH);
    let cap = max_odd_cycle_edges(n);
    let mut roots = Vec::new();
    let mut search = LabeledSearch {
        pairs: &pairs[..depth],
        cap,
        connected_only: false,
        visit: |g: &Graph| roots.push((g.clone(), g.size())),
    };
    search.run(&mut Graph::empty(n).expect("checked order"), 0, 0);
    roots
}

/// Calls `visit` on every labeled odd-cycle graph on `n` vertices.
pub fn for_each_labeled(n: usize, connected_only: bool, visit: impl FnMut(&Graph)) -> Result<(), ExtremalError> {
    check_labeled(n)?;
    let pairs = lex_pairs(n);
    let mut search = LabeledSearch {
        pairs: &pairs,
        cap: max_odd_cycle_edges(n),
        connected_only,
        visit,
    };
    search.run(&mut Graph::empty(n)?, 0, 0);
    Ok(())
}

/// Folds every labeled odd-cycle graph on `n` vertices into per-shard
/// accumulators and merges them in shard order.
pub fn fold_labeled<A, I, F, M>(
    n: usize,
    connected_only: bool,
    exec: Execution,
    init: I,
    fold: F,
    merge: M,
) -> Result<A, ExtremalError>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &Graph) + Sync + Send,
    M: Fn(A, A) -> A,
{
    check_labeled(n)?;
    let pairs = lex_pairs(n);
    let depth = pairs.len().min(SHARD_DEPTH);
    let roots = shard_roots(n, &pairs);
    let cap = max_odd_cycle_edges(n);
    let parts = exec.map(&roots, |(root, m)| {
        let mut acc = init();
        let mut search = LabeledSearch {
            pairs: &pairs,
            cap,
            connected_only,
            visit: |g: &Graph| fold(&mut acc, g),
        };
        search.run(&mut root.clone(), *m, depth);
        acc
    });
    Ok(parts.into_iter().reduce(merge).unwrap_or_else(init))
}

/// Folds over every labeled graph on `n <= 7` vertices, odd-cycle or not.
pub fn fold_all_labeled<A, I, F, M>(
    n: usize,
    connected_only: bool,
    exec: Execution,
    init: I,
    fold: F,
    merge: M,
) -> Result<A, ExtremalError>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &Graph) + Sync + Send,
    M: Fn(A, A) -> A,
{
    const MAX: usize = 7;
    if n > MAX {
        return Err(ExtremalError::OrderTooLarge { n, max: MAX });
    }
    Graph::empty(n)?;
    let total = 1u64 << (n * (n - 1) / 2);
    let chunk = (total / 256).max(1);
    let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
    let parts = exec.map(&starts, |&start| {
        let mut acc = init();
        for bits in start..(start + chunk).min(total) {
            let g = Graph::from_pair_bits(n, bits).expect("n <= 7");
            if !connected_only || g.is_connected() {
                fold(&mut acc, &g);
            }
        }
        acc
    });
    Ok(parts.into_iter().reduce(merge).unwrap_or_else(init))
}

/// Isomorphism classes, bucketed by invariant.
#[derive(Default)]
pub(crate) struct ClassSet {
    graphs: Vec<Graph>,
    buckets: HashMap<GraphInvariant, Vec<usize>>,
}

impl ClassSet {
    pub(crate) fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub(crate) fn absorb(&mut self, other: ClassSet) {
        for g in other.graphs {
            self.insert(g);
        }
    }

    pub(crate) fn insert(&mut self, g: Graph) {
        let bucket = self.buckets.entry(invariant_key(&g)).or_default();
        let seen = bucket
            .iter()
            .any(|&i| is_isomorphic(&self.graphs[i], &g).expect("structured orders fit the iso limit"));
        if !seen {
            bucket.push(self.graphs.len());
            self.graphs.push(g);
        }
    }
}

fn attach(g: &Graph, at: usize, cycle_len: usize) -> Graph {
    let n = g.order();
    let added = if cycle_len == 0 { 1 } else { cycle_len - 1 };
    let mut out = g.with_isolated(added).expect("order within the structured limit");
    if cycle_len == 0 {
        out.insert_edge(at, n);
    } else {
        let ring: Vec<usize> = std::iter::once(at).chain(n..n + added).collect();
        for i in 0..ring.len() {
            out.insert_edge(ring[i], ring[(i + 1) % ring.len()]);
        }
    }
    out
}

/// Connected odd cacti up to isomorphism: entry `k` holds the classes on
/// `k` vertices for `1 <= k <= max_n` (entry 0 is empty).
pub fn connected_odd_cacti(max_n: usize) -> Result<Vec<Vec<Graph>>, ExtremalError> {
    if max_n > MAX_STRUCTURED_ORDER {
        return Err(ExtremalError::OrderTooLarge {
            n: max_n,
            max: MAX_STRUCTURED_ORDER,
        });
    }
    let mut levels: Vec<Vec<Graph>> = vec![Vec::new(); max_n + 1];
    if max_n == 0 {
        return Ok(levels);
    }
    levels[1].push(Graph::empty(1)?);
    for k in 2..=max_n {
        let mut classes = ClassSet::default();
        for g in &levels[k - 1] {
            for at in 0..g.order() {
                classes.insert(attach(g, at, 0));
            }
        }
        for len in (3..=k).step_by(2) {
            for g in &levels[k + 1 - len] {
                for at in 0..g.order() {
                    classes.insert(attach(g, at, len));
                }
            }
        }
        levels[k] = classes.graphs;
    }
    Ok(levels)
}

/// Odd-cycle graphs on `n` vertices up to isomorphism. Disconnected classes
/// are the multisets of connected classes whose orders sum to `n`.
pub fn odd_cycle_graph_classes(n: usize, connected_only: bool) -> Result<Vec<Graph>, ExtremalError> {
    Graph::empty(n)?;
    let levels = connected_odd_cacti(n)?;
    if connected_only {
        return Ok(levels[n].clone());
    }
    let parts: Vec<&Graph> = levels.iter().flatten().collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    multisets(&parts, n, 0, &mut chosen, &mut out);
    Ok(out)
}

fn multisets<'a>(
    parts: &[&'a Graph],
    remaining: usize,
    from: usize,
    chosen: &mut Vec<&'a Graph>,
    out: &mut Vec<Graph>,
) {
    if remaining == 0 {
        let (first, rest) = chosen.split_first().expect("at least one component");
        let union = rest
            .iter()
            .try_fold((*first).clone(), |acc, g| acc.disjoint_union(g))
            .expect("total order is n");
        out.push(union);
        return;
    }
    for i in from..parts.len() {
        if parts[i].order() <= remaining {
            chosen.push(parts[i]);
            multisets(parts, remaining - parts[i].order(), i, chosen, out);
            chosen.pop();
        }
    }
}

/// All odd-cycle graphs on `n` vertices: every labeling in labeled mode, one
/// per isomorphism class in structured mode.
pub fn enumerate_odd_cycle_graphs(
    n: usize,
    connected_only: bool,
    mode: EnumerationMode,
) -> Result<Vec<Graph>, ExtremalError> {
    match mode {
        EnumerationMode::Labeled => {
            let mut out = Vec::new();
            for_each_labeled(n, connected_only, |g| out.push(g.clone()))?;
            Ok(out)
        }
        EnumerationMode::Structured => odd_cycle_graph_classes(n, connected_only),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        let labeled = enumerate_odd_cycle_graphs(2, false, EnumerationMode::Labeled).unwrap();
        assert_eq!(labeled.len(), 2);
        let connected = enumerate_odd_cycle_graphs(2, true, EnumerationMode::Labeled).unwrap();
        assert_eq!(connected, vec![Graph::complete(2).unwrap()]);
        let three = enumerate_odd_cycle_graphs(3, true, EnumerationMode::Structured).unwrap();
        assert_eq!(three.len(), 2);
        assert!(three.contains(&Graph::complete(3).unwrap()));
        // P3 three ways plus K3
        assert_eq!(
            enumerate_odd_cycle_graphs(3, true, EnumerationMode::Labeled)
                .unwrap()
                .len(),
            4
        );
        // every graph on 3 vertices has no even cycle
        assert_eq!(
            enumerate_odd_cycle_graphs(3, false, EnumerationMode::Labeled)
                .unwrap()
                .len(),
            8
        );
    }

    #[test]
    fn four_vertices() {
        // P4, K_{1,3}, paw
        let classes = enumerate_odd_cycle_graphs(4, true, EnumerationMode::Structured).unwrap();
        assert_eq!(classes.len(), 3);
        // 64 graphs minus 3 four-cycles, 6 four-cycles with a chord and K4
        assert_eq!(
            enumerate_odd_cycle_graphs(4, false, EnumerationMode::Labeled)
                .unwrap()
                .len(),
            54
        );
        assert_eq!(odd_cycle_graph_classes(4, false).unwrap().len(), 8);
    }

    #[test]
    fn sharded_fold_matches_plain_walk() {
        let mut plain = Vec::new();
        for_each_labeled(6, false, |g| plain.push(g.pair_bits().unwrap())).unwrap();
        for exec in [Execution::Sequential, Execution::Parallel] {
            let folded = fold_labeled(
                6,
                false,
                exec,
                Vec::new,
                |acc, g| acc.push(g.pair_bits().unwrap()),
                |mut a, b| {
                    a.extend(b);
                    a
                },
            )
            .unwrap();
            assert_eq!(folded, plain);
        }
    }

    #[test]
    fn all_labeled_counts() {
        let count = |n, c| fold_all_labeled(n, c, Execution::Parallel, || 0u64, |a, _| *a += 1, |a, b| a + b).unwrap();
        assert_eq!(count(4, false), 64);
        assert_eq!(count(4, true), 38);
        assert_eq!(count(5, true), 728);
    }

    #[test]
    fn limits() {
        assert!(for_each_labeled(10, true, |_| {}).is_err());
        assert!(connected_odd_cacti(12).is_err());
        assert!(fold_all_labeled(8, true, Execution::Sequential, || (), |_, _| {}, |a, _| a).is_err());
    }
}
