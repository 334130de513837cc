//! Isomorphism for small graphs: color refinement, then a permutation search
//! restricted to matching color classes.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use super::{bit, Bits, Graph, GraphError, MAX_VERTICES};

/// Largest order accepted by [`is_isomorphic`].
pub const MAX_ISO_VERTICES: usize = 16;

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, GraphError> {
    Ok(find_isomorphism(a, b)?.is_some())
}

fn check_size(g: &Graph) -> Result<(), GraphError> {
    if g.order() > MAX_ISO_VERTICES {
        return Err(GraphError::TooLargeForIsomorphism {
            n: g.order(),
            max: MAX_ISO_VERTICES,
        });
    }
    Ok(())
}

/// A bijection `p` with `a.relabel(&p) == b`, if one exists.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Result<Option<Vec<usize>>, GraphError> {
    check_size(a)?;
    check_size(b)?;
    if a.order() != b.order() || a.size() != b.size() || a.degree_sequence() != b.degree_sequence() {
        return Ok(None);
    }
    let Some((ca, cb)) = refine_pair(a, b) else {
        return Ok(None);
    };
    let mut search = Search::new(a, b, &ca, &cb, true);
    let found = search.extend(0, 0, 0) > 0;
    Ok(found.then_some(search.map))
}

/// Number of automorphisms of `g`.
pub fn automorphism_count(g: &Graph) -> Result<u64, GraphError> {
    check_size(g)?;
    let (ca, cb) = refine_pair(g, g).expect("a graph refines like itself");
    Ok(Search::new(g, g, &ca, &cb, false).extend(0, 0, 0))
}

/// Refines degree colors on both graphs with a shared palette until stable.
/// Returns `None` as soon as the color histograms differ.
fn refine_pair(a: &Graph, b: &Graph) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = a.order();
    let mut ca: Vec<u32> = (0..n).map(|v| a.degree(v) as u32).collect();
    let mut cb: Vec<u32> = (0..n).map(|v| b.degree(v) as u32).collect();
    let mut classes = count_classes(&ca);
    loop {
        let sig = |g: &Graph, c: &[u32], v: usize| {
            let mut nb: Vec<u32> = Bits(g.neighbors(v)).map(|w| c[w]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sa: Vec<_> = (0..n).map(|v| sig(a, &ca, v)).collect();
        let sb: Vec<_> = (0..n).map(|v| sig(b, &cb, v)).collect();
        let mut palette = BTreeMap::new();
        for s in sa.iter().chain(&sb) {
            let next = palette.len() as u32;
            palette.entry(s.clone()).or_insert(next);
        }
        let na: Vec<u32> = sa.iter().map(|s| palette[s]).collect();
        let nb: Vec<u32> = sb.iter().map(|s| palette[s]).collect();
        let mut ha = na.clone();
        let mut hb = nb.clone();
        ha.sort_unstable();
        hb.sort_unstable();
        if ha != hb {
            return None;
        }
        let k = count_classes(&na);
        ca = na;
        cb = nb;
        if k == classes {
            return Some((ca, cb));
        }
        classes = k;
    }
}

fn count_classes(c: &[u32]) -> usize {
    let mut s = c.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

/// Smallest color classes first, then vertices adjacent to those already placed.
fn search_order(a: &Graph, ca: &[u32]) -> Vec<usize> {
    let n = a.order();
    let class_size = |v: usize| ca.iter().filter(|&&c| c == ca[v]).count();
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed & bit(v) == 0)
            .min_by_key(|&v| ((a.neighbors(v) & placed == 0) as u8, class_size(v), v))
            .expect("unplaced vertex remains");
        placed |= bit(next);
        order.push(next);
    }
    order
}

struct Search<'a> {
    a: &'a Graph,
    b: &'a Graph,
    ca: &'a [u32],
    cb: &'a [u32],
    order: Vec<usize>,
    map: Vec<usize>,
    first_only: bool,
}

impl<'a> Search<'a> {
    fn new(a: &'a Graph, b: &'a Graph, ca: &'a [u32], cb: &'a [u32], first_only: bool) -> Self {
        let order = search_order(a, ca);
        Search {
            a,
            b,
            ca,
            cb,
            order,
            map: vec![usize::MAX; a.order()],
            first_only,
        }
    }

    /// Counts completions of the partial map, stopping at the first one when
    /// `first_only` is set (the map is then left complete).
    fn extend(&mut self, depth: usize, mapped_a: u64, used_b: u64) -> u64 {
        if depth == self.order.len() {
            return 1;
        }
        let x = self.order[depth];
        let image = Bits(self.a.neighbors(x) & mapped_a).fold(0u64, |acc, w| acc | bit(self.map[w]));
        let mut found = 0;
        for y in Bits(self.b.vertex_mask() & !used_b) {
            if self.cb[y] != self.ca[x] || self.b.neighbors(y) & used_b != image {
                continue;
            }
            self.map[x] = y;
            found += self.extend(depth + 1, mapped_a | bit(x), used_b | bit(y));
            if found > 0 && self.first_only {
                return found;
            }
        }
        self.map[x] = usize::MAX;
        found
    }
}

/// A relabeling-invariant fingerprint. Isomorphic graphs always share it;
/// graphs that share it still need [`is_isomorphic`] to be told apart.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphInvariant {
    order: usize,
    size: usize,
    degrees: Vec<usize>,
    colors: Vec<u64>,
}

pub fn invariant_key(g: &Graph) -> GraphInvariant {
    let n = g.order();
    let mut colors: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    let mut scratch = [0u64; MAX_VERTICES];
    for _ in 0..n.min(8) {
        for v in 0..n {
            let mut nb: Vec<u64> = Bits(g.neighbors(v)).map(|w| colors[w]).collect();
            nb.sort_unstable();
            let mut h = DefaultHasher::new();
            (colors[v], nb).hash(&mut h);
            scratch[v] = h.finish();
        }
        colors.copy_from_slice(&scratch[..n]);
    }
    colors.sort_unstable();
    GraphInvariant {
        order: n,
        size: g.size(),
        degrees: g.degree_sequence(),
        colors,
    }
}
