//! Independent oracles for the integration tests. Nothing here calls the
//! search code under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use bramsey::coloring::{Color, Coloring};
use bramsey::error::Result;
use bramsey::graph::{BiGraph, Side};
use bramsey::verify::{CnfDocument, SatBackend, SolverCommand, SolverOutcome};
use bramsey::witness::CycleWitness;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Vertices numbered left `0..l`, right `l..l+r`; one adjacency mask each.
fn flat_adjacency(g: &BiGraph) -> Vec<u32> {
    let (l, r) = (g.left_size(), g.right_size());
    assert!(l + r <= 24, "oracle is sized for at most 24 vertices");
    let mut adj = vec![0u32; l + r];
    for i in 0..l {
        for j in 0..r {
            if g.has_edge(i, j) {
                adj[i] |= 1 << (l + j);
                adj[l + j] |= 1 << i;
            }
        }
    }
    adj
}

/// Vertex sets spanning at least one cycle, found by Held-Karp path
/// extension from the lowest vertex of each set.
pub fn cycle_vertex_sets(g: &BiGraph) -> Vec<u32> {
    let adj = flat_adjacency(g);
    let n = adj.len();
    // ends[mask]: endpoints of paths from lowest(mask) covering exactly mask
    let mut ends = vec![0u32; 1 << n];
    for s in 0..n {
        ends[1 << s] = 1 << s;
    }
    let mut found = Vec::new();
    for mask in 1u32..(1 << n) {
        let e = ends[mask as usize];
        if e == 0 {
            continue;
        }
        let s = mask.trailing_zeros();
        let above = !((2u32 << s) - 1);
        if mask.count_ones() >= 4 && e & adj[s as usize] != 0 {
            found.push(mask);
        }
        let mut it = e;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            let mut next = adj[v] & !mask & above;
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                ends[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    found
}

/// Every realized cycle length.
pub fn spectrum(g: &BiGraph) -> BTreeSet<usize> {
    cycle_vertex_sets(g).into_iter().map(|m| m.count_ones() as usize).collect()
}

pub fn longest(g: &BiGraph) -> usize {
    spectrum(g).into_iter().max().unwrap_or(0)
}

/// `K_{s,t}` with `s` vertices on the left, by subset enumeration.
pub fn has_biclique(g: &BiGraph, s: usize, t: usize) -> bool {
    let l = g.left_size();
    if s == 0 || t == 0 {
        return s <= l && t <= g.right_size();
    }
    (0u64..1 << l).filter(|x| x.count_ones() as usize == s).any(|x| {
        let mut common = u64::MAX;
        for i in 0..l {
            if x >> i & 1 == 1 {
                common &= g.left_row(i);
            }
        }
        common.count_ones() as usize >= t
    })
}

/// A closed alternating walk with distinct vertices and only edges of `g`.
pub fn is_cycle_in(g: &BiGraph, w: &CycleWitness) -> bool {
    let v = &w.vertices;
    if v.len() < 4 || v.len() % 2 == 1 {
        return false;
    }
    let distinct: BTreeSet<_> = v.iter().map(|x| (x.side == Side::Left, x.index)).collect();
    if distinct.len() != v.len() {
        return false;
    }
    (0..v.len()).all(|k| {
        let (a, b) = (v[k], v[(k + 1) % v.len()]);
        match (a.side, b.side) {
            (Side::Left, Side::Right) => a.index < g.left_size() && b.index < g.right_size() && g.has_edge(a.index, b.index),
            (Side::Right, Side::Left) => b.index < g.left_size() && a.index < g.right_size() && g.has_edge(b.index, a.index),
            _ => false,
        }
    })
}

/// Neither a blue `C_2n` nor a red `C_2m`, by the cycle oracle.
pub fn avoids(c: &Coloring, n: usize, m: usize) -> bool {
    !spectrum(&c.view(Color::Blue)).contains(&(2 * n)) && !spectrum(&c.view(Color::Red)).contains(&(2 * m))
}

pub fn graph_from_index(l: usize, r: usize, idx: u64) -> BiGraph {
    let rows = (0..l).map(|i| (idx >> (i * r)) & ((1 << r) - 1)).collect();
    BiGraph::from_rows(l, r, rows).unwrap()
}

pub fn random_graph(l: usize, r: usize, seed: u64) -> BiGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // vary the density so sparse and dense graphs both appear
    let p: f64 = rng.gen_range(0.2..0.9);
    let mut g = BiGraph::empty(l, r).unwrap();
    for i in 0..l {
        for j in 0..r {
            if rng.gen_bool(p) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Plain DPLL with unit propagation. Small instances only.
pub struct Dpll;

impl Dpll {
    fn search(clauses: &[Vec<i32>], assign: &mut Vec<i8>) -> bool {
        loop {
            let mut unit = None;
            for c in clauses {
                let mut open = None;
                let mut n_open = 0;
                let mut sat = false;
                for &lit in c {
                    let v = assign[lit.unsigned_abs() as usize];
                    if v == 0 {
                        n_open += 1;
                        open = Some(lit);
                    } else if (v > 0) == (lit > 0) {
                        sat = true;
                        break;
                    }
                }
                if sat {
                    continue;
                }
                match n_open {
                    0 => return false,
                    1 => {
                        unit = open;
                        break;
                    }
                    _ => {}
                }
            }
            match unit {
                Some(lit) => assign[lit.unsigned_abs() as usize] = if lit > 0 { 1 } else { -1 },
                None => break,
            }
        }
        let Some(var) = (1..assign.len()).find(|&v| assign[v] == 0) else {
            return true;
        };
        for val in [1, -1] {
            let mut next = assign.clone();
            next[var] = val;
            if Self::search(clauses, &mut next) {
                *assign = next;
                return true;
            }
        }
        false
    }

    pub fn solve_clauses(num_vars: usize, clauses: &[Vec<i32>]) -> Option<Vec<i32>> {
        let mut assign = vec![0i8; num_vars + 1];
        Self::search(clauses, &mut assign).then(|| {
            (1..=num_vars as i32).map(|v| if assign[v as usize] >= 0 { v } else { -v }).collect()
        })
    }
}

impl SatBackend for Dpll {
    fn solve(&self, doc: &CnfDocument) -> Result<SolverOutcome> {
        Ok(match Dpll::solve_clauses(doc.num_vars, &doc.clauses) {
            Some(model) => SolverOutcome::Sat(model),
            None => SolverOutcome::Unsat,
        })
    }

    fn describe(&self) -> String {
        "test dpll".into()
    }
}

/// The external solver: `BRAMSEY_SAT_CMD`, else `splr` if it is installed.
pub fn external_solver() -> Option<SolverCommand> {
    if let Ok(Some(s)) = SolverCommand::resolve(None, None) {
        return Some(s);
    }
    let on_path = std::env::var_os("PATH")
        .map(|p| std::env::split_paths(&p).any(|d| d.join("splr").is_file()))
        .unwrap_or(false);
    on_path.then(|| {
        SolverCommand::new("splr -q -C -r {model} {cnf} >/dev/null 2>&1; [ $? -eq 20 ] && echo UNSAT > {model}; true")
            .expect("valid template")
    })
}
