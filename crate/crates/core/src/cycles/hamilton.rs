//! Constructive versions of two degree theorems for bipartite graphs.

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::{BiGraph, Side, Vertex};
use crate::witness::CycleWitness;

/// A Hamiltonian cycle together with the number of rotations spent on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonTrace {
    pub cycle: CycleWitness,
    pub rotations: usize,
}

/// Hamiltonian cycle of a balanced bipartite graph with `d(x) + d(y) >= a + 1`
/// for every nonadjacent pair, `a >= 4` the side size.
pub fn hamiltonian_by_degree(g: &BiGraph) -> Result<CycleWitness> {
    hamiltonian_by_degree_traced(g).map(|t| t.cycle)
}

/// First nonadjacent pair breaking the degree condition, if any.
pub fn degree_condition_violation(g: &BiGraph) -> Option<(usize, usize)> {
    let a = g.left_size();
    for i in 0..a {
        let dx = g.degree(Vertex::left(i));
        for j in bits::members(!g.left_row(i) & bits::full(g.right_size())) {
            if dx + g.degree(Vertex::right(j)) < a + 1 {
                return Some((i, j));
            }
        }
    }
    None
}

/// Walks the closure backwards: starting from a Hamiltonian cycle of
/// `K_{a,a}`, the non-edges of `g` are deleted one by one and the cycle is
/// repaired by a single rotation whenever it used the deleted edge.
pub fn hamiltonian_by_degree_traced(g: &BiGraph) -> Result<HamiltonTrace> {
    let a = g.left_size();
    if g.right_size() != a {
        return Err(Error::Precondition(format!(
            "sides must be equal, got {}x{}",
            a,
            g.right_size()
        )));
    }
    if a < 4 {
        return Err(Error::Precondition(format!("side size {a} < 4")));
    }
    if let Some((i, j)) = degree_condition_violation(g) {
        return Err(Error::Precondition(format!(
            "x{i} and y{j} are nonadjacent with d(x{i})+d(y{j}) = {} < {}",
            g.degree(Vertex::left(i)) + g.degree(Vertex::right(j)),
            a + 1
        )));
    }
    let order: Vec<usize> = (0..a).collect();
    let mut cycle = CycleWitness::from_pairs(&order, &order).vertices;
    let mut h = BiGraph::complete(a, a)?;
    let mut rotations = 0;
    let missing: Vec<(usize, usize)> = (0..a)
        .flat_map(|i| (0..a).map(move |j| (i, j)))
        .filter(|&(i, j)| !g.has_edge(i, j))
        .collect();
    for (i, j) in missing {
        h.remove_edge(i, j);
        let x = Vertex::left(i);
        let y = Vertex::right(j);
        let n = cycle.len();
        let k = cycle.iter().position(|&v| v == x).expect("cycle is Hamiltonian");
        let path: Vec<Vertex> = if cycle[(k + 1) % n] == y {
            (0..n).map(|t| cycle[(k + n - t) % n]).collect()
        } else if cycle[(k + n - 1) % n] == y {
            (0..n).map(|t| cycle[(k + t) % n]).collect()
        } else {
            continue;
        };
        // path[0] = x, path[n-1] = y; 0-based even t is the odd position t+1
        let t = (0..n - 1)
            .step_by(2)
            .find(|&t| h.adjacent(path[t + 1], x) && h.adjacent(path[t], y))
            .ok_or_else(|| Error::Precondition(format!("no rotation repairs x{i}y{j}")))?;
        let mut next: Vec<Vertex> = path[..=t].to_vec();
        next.extend(path[t + 1..].iter().rev());
        cycle = next;
        rotations += 1;
    }
    Ok(HamiltonTrace {
        cycle: CycleWitness::new(cycle),
        rotations,
    })
}

/// How [`jackson_cycle`] produced its cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum JacksonRoute {
    /// Greedy insertion of right vertices into a growing cycle.
    Insertion,
    /// Insertion got stuck; exact search for a cycle of length `2q`.
    ExactSearch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacksonTrace {
    pub cycle: CycleWitness,
    pub route: JacksonRoute,
}

/// First right vertex breaking `d(y) >= max{q, p/2 + 1}`, if any.
pub fn jackson_violation(g: &BiGraph) -> Option<usize> {
    let (p, q) = (g.left_size(), g.right_size());
    (0..q).find(|&j| {
        let d = g.degree(Vertex::right(j));
        d < q || 2 * d < p + 2
    })
}

/// A cycle through every right vertex when `p >= q >= 2` and each right
/// vertex has `d(y) >= max{q, p/2 + 1}`.
pub fn jackson_cycle(g: &BiGraph) -> Result<CycleWitness> {
    jackson_cycle_traced(g).map(|t| t.cycle)
}

pub fn jackson_cycle_traced(g: &BiGraph) -> Result<JacksonTrace> {
    let (p, q) = (g.left_size(), g.right_size());
    if p < q || q < 2 {
        return Err(Error::Precondition(format!("need p >= q >= 2, got p={p} q={q}")));
    }
    if let Some(j) = jackson_violation(g) {
        return Err(Error::Precondition(format!(
            "d(y{j}) = {} < max{{{q}, {p}/2 + 1}}",
            g.degree(Vertex::right(j))
        )));
    }
    if let Some(cycle) = insertion(g) {
        return Ok(JacksonTrace {
            cycle,
            route: JacksonRoute::Insertion,
        });
    }
    let cycle = super::find_cycle(g, 2 * q)
        .ok_or_else(|| Error::Precondition(format!("no cycle of length {} exists", 2 * q)))?;
    Ok(JacksonTrace {
        cycle,
        route: JacksonRoute::ExactSearch,
    })
}

fn insertion(g: &BiGraph) -> Option<CycleWitness> {
    let q = g.right_size();
    let common = g.right_row(0) & g.right_row(1);
    let mut it = bits::members(common);
    let (u, w) = (it.next()?, it.next()?);
    let mut cycle = vec![Vertex::left(u), Vertex::right(0), Vertex::left(w), Vertex::right(1)];
    let mut used_l = bits::bit(u) | bits::bit(w);
    for y in 2..q {
        let n = cycle.len();
        let spot = (0..n).find_map(|k| {
            let (a, b) = (cycle[k], cycle[(k + 1) % n]);
            let (xl, yr) = match a.side {
                Side::Left => (a.index, b.index),
                Side::Right => (b.index, a.index),
            };
            if !g.has_edge(xl, y) {
                return None;
            }
            let fresh = g.right_row(y) & g.right_row(yr) & !used_l;
            (fresh != 0).then(|| (k, fresh.trailing_zeros() as usize, a.side))
        })?;
        let (k, xn, side) = spot;
        // turn the edge (cycle[k], cycle[k+1]) into x .. y .. xn .. y'
        let insert = match side {
            Side::Left => [Vertex::right(y), Vertex::left(xn)],
            Side::Right => [Vertex::left(xn), Vertex::right(y)],
        };
        cycle.splice(k + 1..k + 1, insert);
        used_l |= bits::bit(xn);
    }
    Some(CycleWitness::new(cycle))
}
