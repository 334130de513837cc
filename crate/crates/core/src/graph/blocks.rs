//! Connectivity, biconnected blocks and the odd-cycle test.

use super::{bit, Bits, Edge, Graph, GraphError, MAX_VERTICES};

/// Connected components in order of their smallest vertex, each with the map
/// from component labels back to the labels of `g`.
pub fn connected_components(g: &Graph) -> Vec<(Graph, Vec<usize>)> {
    let mut rest = g.vertex_mask();
    let mut out = Vec::new();
    while rest != 0 {
        let start = rest.trailing_zeros() as usize;
        let comp = g.reach(start, rest);
        rest &= !comp;
        out.push(g.induced(comp).expect("component is nonempty"));
    }
    out
}

/// Biconnected components of a graph. Every edge lies in exactly one block;
/// isolated vertices belong to none.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    blocks: Vec<Vec<Edge>>,
    cut_vertices: u64,
}

impl BlockDecomposition {
    /// Blocks as sorted edge lists, ordered by their first edge.
    pub fn blocks(&self) -> &[Vec<Edge>] {
        &self.blocks
    }

    pub fn cut_vertex_mask(&self) -> u64 {
        self.cut_vertices
    }

    pub fn cut_vertices(&self) -> Vec<usize> {
        Bits(self.cut_vertices).collect()
    }

    pub fn block_vertices(block: &[Edge]) -> u64 {
        block.iter().fold(0, |acc, &(u, v)| acc | bit(u) | bit(v))
    }
}

/// Hopcroft-Tarjan over the edge stack. `on_block` receives each block's
/// edges as they are popped and may return `false` to stop early; the return
/// value is `None` in that case and the cut-vertex mask otherwise.
fn walk_blocks(g: &Graph, mut on_block: impl FnMut(&[Edge]) -> bool) -> Option<u64> {
    struct State<'a, F> {
        g: &'a Graph,
        disc: [u8; MAX_VERTICES],
        low: [u8; MAX_VERTICES],
        timer: u8,
        stack: Vec<Edge>,
        cuts: u64,
        on_block: F,
        stopped: bool,
    }

    impl<F: FnMut(&[Edge]) -> bool> State<'_, F> {
        fn dfs(&mut self, u: usize, parent: usize) {
            self.timer += 1;
            self.disc[u] = self.timer;
            self.low[u] = self.timer;
            let mut children = 0;
            for w in Bits(self.g.neighbors(u)) {
                if self.stopped {
                    return;
                }
                if self.disc[w] == 0 {
                    children += 1;
                    self.stack.push((u, w));
                    self.dfs(w, u);
                    if self.stopped {
                        return;
                    }
                    self.low[u] = self.low[u].min(self.low[w]);
                    if self.low[w] >= self.disc[u] {
                        if parent != usize::MAX || children > 1 {
                            self.cuts |= bit(u);
                        }
                        let at = self
                            .stack
                            .iter()
                            .rposition(|&e| e == (u, w))
                            .expect("tree edge is on the stack");
                        if !(self.on_block)(&self.stack[at..]) {
                            self.stopped = true;
                        }
                        self.stack.truncate(at);
                    }
                } else if w != parent && self.disc[w] < self.disc[u] {
                    self.stack.push((u, w));
                    self.low[u] = self.low[u].min(self.disc[w]);
                }
            }
            // A root with a single child is not a cut vertex.
            if parent == usize::MAX && children < 2 {
                self.cuts &= !bit(u);
            }
        }
    }

    let mut st = State {
        g,
        disc: [0; MAX_VERTICES],
        low: [0; MAX_VERTICES],
        timer: 0,
        stack: Vec::with_capacity(g.order() + 8),
        cuts: 0,
        on_block: &mut on_block,
        stopped: false,
    };
    for v in 0..g.order() {
        if st.disc[v] == 0 {
            st.dfs(v, usize::MAX);
            if st.stopped {
                return None;
            }
        }
    }
    Some(st.cuts)
}

pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let mut blocks = Vec::new();
    let cut_vertices = walk_blocks(g, |b| {
        let mut edges: Vec<Edge> = b.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        blocks.push(edges);
        true
    })
    .expect("collector never stops");
    blocks.sort_unstable();
    BlockDecomposition { blocks, cut_vertices }
}

/// A block is an odd cycle when it has as many vertices as edges, that
/// number is odd, and every vertex has degree two inside the block.
fn is_odd_cycle_block(block: &[Edge]) -> bool {
    let k = block.len();
    if k == 1 {
        return true;
    }
    let mut deg = [0u8; MAX_VERTICES];
    let mut mask = 0u64;
    for &(u, v) in block {
        deg[u] += 1;
        deg[v] += 1;
        mask |= bit(u) | bit(v);
    }
    k % 2 == 1 && mask.count_ones() as usize == k && Bits(mask).all(|v| deg[v] == 2)
}

/// True iff `g` has no cycle of even length, i.e. every block is a bridge or
/// an odd cycle.
pub fn is_odd_cycle_graph(g: &Graph) -> bool {
    // Quick reject: more edges than any odd cactus on this many vertices.
    if g.size() > 3 * (g.order().saturating_sub(1)) / 2 {
        return false;
    }
    walk_blocks(g, is_odd_cycle_block).is_some()
}

/// The odd cycles of length at least five, each as a vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LongOddCycleSet {
    cycles: Vec<Vec<usize>>,
}

impl LongOddCycleSet {
    /// Cycles in lexicographic order. Each starts at its smallest vertex and
    /// continues toward the smaller of that vertex's two cycle neighbors.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Total number of edges over all listed cycles.
    pub fn total_edges(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }
}

/// In an odd-cycle graph every cycle is a block, so the long odd cycles are
/// exactly the blocks with five or more edges.
pub fn long_odd_cycles(g: &Graph) -> Result<LongOddCycleSet, GraphError> {
    let decomposition = block_decomposition(g);
    if !decomposition.blocks.iter().all(|b| is_odd_cycle_block(b)) {
        return Err(GraphError::EvenCycle);
    }
    let mut cycles: Vec<Vec<usize>> = decomposition
        .blocks
        .iter()
        .filter(|b| b.len() >= 5)
        .map(|b| cycle_order(b))
        .collect();
    cycles.sort_unstable();
    Ok(LongOddCycleSet { cycles })
}

fn cycle_order(block: &[Edge]) -> Vec<usize> {
    let mut nbrs = [0u64; MAX_VERTICES];
    let mut mask = 0u64;
    for &(u, v) in block {
        nbrs[u] |= bit(v);
        nbrs[v] |= bit(u);
        mask |= bit(u) | bit(v);
    }
    let start = mask.trailing_zeros() as usize;
    let mut seq = Vec::with_capacity(block.len());
    seq.push(start);
    let mut prev = start;
    let mut cur = nbrs[start].trailing_zeros() as usize;
    while cur != start {
        seq.push(cur);
        let next = (nbrs[cur] & !bit(prev)).trailing_zeros() as usize;
        prev = cur;
        cur = next;
    }
    seq
}
