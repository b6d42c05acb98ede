//! Exact-length even cycles, longest cycles and cycle spectra.
//!
//! Every query first splits the graph into biconnected blocks, since a cycle
//! lives inside one block. Blocks too small for the requested length are
//! skipped, complete blocks are answered directly, and the rest go to a
//! depth-first search over alternating paths with a failure memo.

mod biclique;
pub mod glue;
pub mod hamilton;

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::{BiGraph, Side, Vertex};
use crate::witness::CycleWitness;

pub use biclique::find_biclique;
pub use glue::{glue_complete_pairs, near_complete_glue_check, Connector, GlueReport, GlueSpec, NearCompleteReport, NearCompleteSpec};
pub use hamilton::{
    degree_condition_violation, hamiltonian_by_degree, hamiltonian_by_degree_traced, jackson_cycle, jackson_cycle_traced,
    jackson_violation, HamiltonTrace, JacksonRoute, JacksonTrace,
};

/// Memo entries kept per search before the table is flushed.
const MEMO_CAP: usize = 1 << 21;

/// Realized even cycle lengths of a graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub lengths: BTreeSet<usize>,
    pub longest: usize,
    pub witnesses: BTreeMap<usize, CycleWitness>,
}

impl SpectrumReport {
    fn insert(&mut self, w: CycleWitness) {
        let len = w.len();
        self.lengths.insert(len);
        self.longest = self.longest.max(len);
        self.witnesses.insert(len, w);
    }
}

/// A biconnected block given by its two side sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub left: u64,
    pub right: u64,
}

impl Block {
    /// Longest cycle the block could hold by size alone.
    pub fn capacity(&self) -> usize {
        2 * (self.left.count_ones().min(self.right.count_ones()) as usize)
    }
}

/// Biconnected blocks that contain at least one cycle.
pub fn cyclic_blocks(g: &BiGraph) -> Vec<Block> {
    let nl = g.left_size();
    let n = nl + g.right_size();
    let id = |v: Vertex| match v.side {
        Side::Left => v.index,
        Side::Right => nl + v.index,
    };
    let vertex = |k: usize| {
        if k < nl {
            Vertex::left(k)
        } else {
            Vertex::right(k - nl)
        }
    };
    struct St {
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Block>,
    }
    let mut st = St {
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    fn dfs(
        u: usize,
        parent: usize,
        g: &BiGraph,
        st: &mut St,
        id: &dyn Fn(Vertex) -> usize,
        vertex: &dyn Fn(usize) -> Vertex,
        nl: usize,
    ) {
        st.disc[u] = st.time;
        st.low[u] = st.time;
        st.time += 1;
        let uv = vertex(u);
        let other = uv.side.other();
        for w in bits::members(g.neighbors(uv)) {
            let v = id(Vertex { side: other, index: w });
            if st.disc[v] == usize::MAX {
                st.stack.push((u, v));
                dfs(v, u, g, st, id, vertex, nl);
                st.low[u] = st.low[u].min(st.low[v]);
                if st.low[v] >= st.disc[u] {
                    let mut left = 0u64;
                    let mut right = 0u64;
                    let mut edges = 0;
                    while let Some((a, b)) = st.stack.pop() {
                        for k in [a, b] {
                            if k < nl {
                                left |= bits::bit(k);
                            } else {
                                right |= bits::bit(k - nl);
                            }
                        }
                        edges += 1;
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    if edges > 1 {
                        st.out.push(Block { left, right });
                    }
                }
            } else if v != parent && st.disc[v] < st.disc[u] {
                st.stack.push((u, v));
                st.low[u] = st.low[u].min(st.disc[v]);
            }
        }
    }
    for u in 0..n {
        if st.disc[u] == usize::MAX {
            dfs(u, usize::MAX, g, &mut st, &id, &vertex, nl);
        }
    }
    st.out
}

fn check_length(g: &BiGraph, len: usize) -> Result<()> {
    let cap = 2 * g.left_size().min(g.right_size());
    if len % 2 == 1 {
        return Err(Error::CycleLength {
            length: len,
            reason: "bipartite cycles have even length".into(),
        });
    }
    if len < 4 || len > cap {
        return Err(Error::CycleLength {
            length: len,
            reason: format!("must lie in 4..={cap} for a {}x{} graph", g.left_size(), g.right_size()),
        });
    }
    Ok(())
}

/// A cycle of exactly `len` vertices, if one exists.
///
/// `len` must be even and within `4..=2*min(left, right)`.
pub fn has_cycle_of_length(g: &BiGraph, len: usize) -> Result<Option<CycleWitness>> {
    check_length(g, len)?;
    Ok(find_cycle(g, len))
}

/// Like [`has_cycle_of_length`] but answers `None` for lengths that cannot occur.
pub fn find_cycle(g: &BiGraph, len: usize) -> Option<CycleWitness> {
    if len < 4 || len % 2 == 1 {
        return None;
    }
    cyclic_blocks(g)
        .iter()
        .find_map(|b| cycle_in_block(g, *b, len))
}

fn cycle_in_block(g: &BiGraph, b: Block, len: usize) -> Option<CycleWitness> {
    if b.capacity() < len {
        return None;
    }
    if g.is_complete_between(b.left, b.right) {
        let k = len / 2;
        let l: Vec<usize> = bits::members(b.left).take(k).collect();
        let r: Vec<usize> = bits::members(b.right).take(k).collect();
        return Some(CycleWitness::from_pairs(&l, &r));
    }
    let mut found = Vec::new();
    search_cycles(g, b, len, 1, &mut found);
    found.pop()
}

/// Up to `limit` distinct cycles of exactly `len` vertices (as vertex sets
/// with their cyclic order, each listed once regardless of direction).
pub fn find_cycles(g: &BiGraph, len: usize, limit: usize) -> Vec<CycleWitness> {
    let mut out = Vec::new();
    if len < 4 || len % 2 == 1 || limit == 0 {
        return out;
    }
    for b in cyclic_blocks(g) {
        if b.capacity() < len {
            continue;
        }
        search_cycles(g, b, len, limit, &mut out);
        if out.len() >= limit {
            break;
        }
    }
    out
}

/// Longest cycle length with a witness; `longest` is 0 for a forest.
pub fn longest_even_cycle(g: &BiGraph) -> SpectrumReport {
    let mut report = SpectrumReport::default();
    let blocks = cyclic_blocks(g);
    let top = blocks.iter().map(Block::capacity).max().unwrap_or(0);
    let mut len = top;
    while len >= 4 {
        if let Some(w) = blocks.iter().find_map(|b| cycle_in_block(g, *b, len)) {
            report.insert(w);
            return report;
        }
        len -= 2;
    }
    report
}

/// Every realized even cycle length, each with a witness.
pub fn cycle_spectrum(g: &BiGraph) -> SpectrumReport {
    let mut report = SpectrumReport::default();
    let blocks = cyclic_blocks(g);
    let top = blocks.iter().map(Block::capacity).max().unwrap_or(0);
    for len in (4..=top).step_by(2) {
        if let Some(w) = blocks.iter().find_map(|b| cycle_in_block(g, *b, len)) {
            report.insert(w);
        }
    }
    report
}

/// A cycle of exactly `len` vertices that uses the edge `x_i y_j`.
pub fn cycle_through_edge(g: &BiGraph, i: usize, j: usize, len: usize) -> Option<CycleWitness> {
    if len < 4 || len % 2 == 1 || !g.has_edge(i, j) {
        return None;
    }
    let mut s = PathSearch {
        g,
        len,
        half: len / 2,
        allowed_l: bits::full(g.left_size()),
        allowed_r: bits::full(g.right_size()) & !bits::bit(j),
        close: bits::bit(j),
        path: vec![Vertex::left(i)],
        used_l: bits::bit(i),
        used_r: 0,
        memo: HashSet::new(),
        limit: 1,
        found: Vec::new(),
        seen: HashSet::new(),
    };
    s.extend();
    s.found.pop()
}

fn search_cycles(g: &BiGraph, b: Block, len: usize, limit: usize, out: &mut Vec<CycleWitness>) {
    let half = len / 2;
    let mut seen: HashSet<Vec<Vertex>> = out.iter().map(|w| normalize(&w.vertices)).collect();
    for s in bits::members(b.left) {
        // s is the least left vertex of every cycle found from it
        let allowed_l = b.left & !bits::full(s);
        if (allowed_l.count_ones() as usize) < half {
            break;
        }
        let close = g.left_row(s) & b.right;
        if close.count_ones() < 2 {
            continue;
        }
        let mut ps = PathSearch {
            g,
            len,
            half,
            allowed_l,
            allowed_r: b.right,
            close,
            path: vec![Vertex::left(s)],
            used_l: bits::bit(s),
            used_r: 0,
            memo: HashSet::new(),
            limit: limit - out.len(),
            found: Vec::new(),
            seen: std::mem::take(&mut seen),
        };
        ps.extend();
        seen = std::mem::take(&mut ps.seen);
        out.append(&mut ps.found);
        if out.len() >= limit {
            return;
        }
    }
}

/// Rotation and reflection normal form of a cyclic sequence.
fn normalize(vs: &[Vertex]) -> Vec<Vertex> {
    let n = vs.len();
    let k = (0..n).min_by_key(|&k| vs[k]).expect("nonempty");
    let fwd: Vec<Vertex> = (0..n).map(|t| vs[(k + t) % n]).collect();
    let bwd: Vec<Vertex> = (0..n).map(|t| vs[(k + n - t) % n]).collect();
    fwd.min(bwd)
}

/// Alternating path search from a fixed left start; the path closes when its
/// final (right) vertex lies in `close`.
struct PathSearch<'a> {
    g: &'a BiGraph,
    len: usize,
    half: usize,
    allowed_l: u64,
    allowed_r: u64,
    close: u64,
    path: Vec<Vertex>,
    used_l: u64,
    used_r: u64,
    memo: HashSet<(u64, u64, u8)>,
    limit: usize,
    found: Vec<CycleWitness>,
    seen: HashSet<Vec<Vertex>>,
}

impl PathSearch<'_> {
    /// Returns true when at least one new cycle was recorded below this node.
    fn extend(&mut self) -> bool {
        let depth = self.path.len();
        if depth == self.len {
            let w = CycleWitness::new(self.path.clone());
            if self.seen.insert(normalize(&w.vertices)) {
                self.found.push(w);
                return true;
            }
            return false;
        }
        let need_l = self.half - self.used_l.count_ones() as usize;
        let need_r = self.half - self.used_r.count_ones() as usize;
        let free_close = self.close & !self.used_r;
        if ((self.allowed_l & !self.used_l).count_ones() as usize) < need_l
            || (((self.allowed_r | self.close) & !self.used_r).count_ones() as usize) < need_r
            || free_close == 0
        {
            return false;
        }
        let last = *self.path.last().expect("nonempty path");
        let key = (self.used_l, self.used_r, last.index as u8);
        if self.memo.contains(&key) {
            return false;
        }
        let candidates = match last.side {
            Side::Left => {
                let row = self.g.left_row(last.index) & !self.used_r;
                if depth + 1 == self.len {
                    row & free_close
                } else {
                    row & self.allowed_r
                }
            }
            Side::Right => self.g.right_row(last.index) & self.allowed_l & !self.used_l,
        };
        let mut any = false;
        for c in bits::members(candidates) {
            let v = Vertex {
                side: last.side.other(),
                index: c,
            };
            match v.side {
                Side::Left => self.used_l |= bits::bit(c),
                Side::Right => self.used_r |= bits::bit(c),
            }
            self.path.push(v);
            any |= self.extend();
            self.path.pop();
            match v.side {
                Side::Left => self.used_l &= !bits::bit(c),
                Side::Right => self.used_r &= !bits::bit(c),
            }
            if self.found.len() >= self.limit {
                return true;
            }
        }
        if !any {
            if self.memo.len() >= MEMO_CAP {
                self.memo.clear();
            }
            self.memo.insert(key);
        }
        any
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::validate_cycle_witness;

    fn cycle_graph(k: usize) -> BiGraph {
        // x_t y_t x_{t+1} ..., a single cycle on 2k vertices
        let mut edges = Vec::new();
        for t in 0..k {
            edges.push((t, t));
            edges.push(((t + 1) % k, t));
        }
        BiGraph::from_edges(k, k, &edges).unwrap()
    }

    #[test]
    fn complete_graphs() {
        for a in 1..=5 {
            for b in 1..=5 {
                let g = BiGraph::complete(a, b).unwrap();
                for len in (4..=10).step_by(2) {
                    let got = find_cycle(&g, len);
                    assert_eq!(got.is_some(), len <= 2 * a.min(b), "K_{a},{b} L={len}");
                    if let Some(w) = got {
                        validate_cycle_witness(&g, &w).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn six_cycle() {
        let g = cycle_graph(3);
        assert!(has_cycle_of_length(&g, 4).unwrap().is_none());
        let w = has_cycle_of_length(&g, 6).unwrap().unwrap();
        validate_cycle_witness(&g, &w).unwrap();
        assert!(has_cycle_of_length(&g, 5).is_err());
        assert!(has_cycle_of_length(&g, 8).is_err());
        assert!(has_cycle_of_length(&g, 2).is_err());
    }

    #[test]
    fn spectrum_of_disjoint_cycles() {
        // a 4-cycle on x0,x1,y0,y1 and an 8-cycle on x2..x5, y2..y5
        let mut edges = vec![(0, 0), (0, 1), (1, 0), (1, 1)];
        for t in 0..4 {
            edges.push((2 + t, 2 + t));
            edges.push((2 + (t + 1) % 4, 2 + t));
        }
        let g = BiGraph::from_edges(6, 6, &edges).unwrap();
        let s = cycle_spectrum(&g);
        assert_eq!(s.lengths, BTreeSet::from([4, 8]));
        assert_eq!(s.longest, 8);
        for w in s.witnesses.values() {
            validate_cycle_witness(&g, w).unwrap();
        }
        let k33 = BiGraph::complete(3, 3).unwrap();
        assert_eq!(cycle_spectrum(&k33).lengths, BTreeSet::from([4, 6]));
        assert_eq!(longest_even_cycle(&BiGraph::complete(5, 9).unwrap()).longest, 10);
        assert_eq!(longest_even_cycle(&BiGraph::empty(3, 3).unwrap()).longest, 0);
    }

    #[test]
    fn blocks_of_bowtie() {
        // two 4-cycles sharing x0
        let g = BiGraph::from_edges(3, 4, &[(0, 0), (0, 1), (1, 0), (1, 1), (0, 2), (0, 3), (2, 2), (2, 3)]).unwrap();
        let blocks = cyclic_blocks(&g);
        assert_eq!(blocks.len(), 2);
        assert!(find_cycle(&g, 6).is_none());
        assert!(find_cycle(&g, 4).is_some());
    }

    #[test]
    fn through_edge_and_many() {
        let g = BiGraph::complete(3, 3).unwrap();
        let w = cycle_through_edge(&g, 2, 1, 6).unwrap();
        validate_cycle_witness(&g, &w).unwrap();
        assert!(w.edges().any(|(a, b)| {
            (a == Vertex::left(2) && b == Vertex::right(1)) || (b == Vertex::left(2) && a == Vertex::right(1))
        }));
        // K_{3,3} has 9 four-cycles and 6 six-cycles
        assert_eq!(find_cycles(&g, 4, 100).len(), 9);
        assert_eq!(find_cycles(&g, 6, 100).len(), 6);
        assert_eq!(find_cycles(&g, 4, 5).len(), 5);
    }
}
