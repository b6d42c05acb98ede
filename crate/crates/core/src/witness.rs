//! Checkable witnesses: cycles and bicliques inside a bipartite graph.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{BiGraph, Side, Vertex};

/// An even cycle given as its alternating vertex sequence; the closing edge
/// runs from the last vertex back to the first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleWitness {
    pub vertices: Vec<Vertex>,
}

impl CycleWitness {
    pub fn new(vertices: Vec<Vertex>) -> CycleWitness {
        CycleWitness { vertices }
    }

    /// Alternating cycle `x_{l0} y_{r0} x_{l1} y_{r1} ..`.
    pub fn from_pairs(left: &[usize], right: &[usize]) -> CycleWitness {
        assert_eq!(left.len(), right.len());
        let vertices = left
            .iter()
            .zip(right)
            .flat_map(|(&l, &r)| [Vertex::left(l), Vertex::right(r)])
            .collect();
        CycleWitness { vertices }
    }

    /// Number of vertices, which equals the number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Consecutive pairs including the closing pair.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |k| (self.vertices[k], self.vertices[(k + 1) % n]))
    }

    /// The vertex `offset` steps after position `pos`, wrapping around.
    pub fn at(&self, pos: usize, offset: isize) -> Vertex {
        let n = self.vertices.len() as isize;
        self.vertices[((pos as isize + offset).rem_euclid(n)) as usize]
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    /// Left and right vertex sets as bitsets.
    pub fn vertex_sets(&self) -> (u64, u64) {
        let mut l = 0u64;
        let mut r = 0u64;
        for v in &self.vertices {
            match v.side {
                Side::Left => l |= 1 << v.index,
                Side::Right => r |= 1 << v.index,
            }
        }
        (l, r)
    }
}

impl fmt::Display for CycleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.vertices.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// The first condition a witness fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessViolation {
    TooShort(usize),
    OddLength(usize),
    OutOfRange(Vertex),
    DuplicateVertex(Vertex),
    SidesNotAlternating(Vertex, Vertex),
    MissingEdge(Vertex, Vertex),
}

impl fmt::Display for WitnessViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessViolation::TooShort(n) => write!(f, "cycle too short ({n} vertices)"),
            WitnessViolation::OddLength(n) => write!(f, "odd length {n}"),
            WitnessViolation::OutOfRange(v) => write!(f, "vertex {v} out of range"),
            WitnessViolation::DuplicateVertex(v) => write!(f, "duplicate vertex {v}"),
            WitnessViolation::SidesNotAlternating(a, b) => {
                write!(f, "sides do not alternate at {a} {b}")
            }
            WitnessViolation::MissingEdge(a, b) => write!(f, "missing edge {a}-{b}"),
        }
    }
}

impl std::error::Error for WitnessViolation {}

/// Accept iff `w` is a cycle of `g`: even length at least 4, distinct vertices,
/// alternating sides and every consecutive pair (closing pair included) an edge.
pub fn validate_cycle_witness(g: &BiGraph, w: &CycleWitness) -> Result<(), WitnessViolation> {
    let n = w.len();
    if n < 4 {
        return Err(WitnessViolation::TooShort(n));
    }
    if n % 2 == 1 {
        return Err(WitnessViolation::OddLength(n));
    }
    let mut seen = HashSet::with_capacity(n);
    for &v in &w.vertices {
        if !g.contains(v) {
            return Err(WitnessViolation::OutOfRange(v));
        }
        if !seen.insert(v) {
            return Err(WitnessViolation::DuplicateVertex(v));
        }
    }
    for (a, b) in w.edges() {
        if a.side == b.side {
            return Err(WitnessViolation::SidesNotAlternating(a, b));
        }
        if !g.adjacent(a, b) {
            return Err(WitnessViolation::MissingEdge(a, b));
        }
    }
    Ok(())
}

/// A complete bipartite subgraph `K_{|left|,|right|}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicliqueWitness {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

pub fn validate_biclique(g: &BiGraph, w: &BicliqueWitness) -> Result<(), WitnessViolation> {
    let mut seen = HashSet::new();
    for v in w
        .left
        .iter()
        .map(|&i| Vertex::left(i))
        .chain(w.right.iter().map(|&j| Vertex::right(j)))
    {
        if !g.contains(v) {
            return Err(WitnessViolation::OutOfRange(v));
        }
        if !seen.insert(v) {
            return Err(WitnessViolation::DuplicateVertex(v));
        }
    }
    for &i in &w.left {
        for &j in &w.right {
            if !g.has_edge(i, j) {
                return Err(WitnessViolation::MissingEdge(Vertex::left(i), Vertex::right(j)));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{Color, Coloring};

    #[test]
    fn four_cycle_in_blue_k22() {
        let c = Coloring::uniform(2, 2, Color::Blue).unwrap();
        let w = CycleWitness::from_pairs(&[0, 1], &[0, 1]);
        assert_eq!(validate_cycle_witness(&c.view(Color::Blue), &w), Ok(()));
        assert!(matches!(
            validate_cycle_witness(&c.view(Color::Red), &w),
            Err(WitnessViolation::MissingEdge(..))
        ));
    }

    #[test]
    fn rejects_malformed_witnesses() {
        let g = BiGraph::complete(3, 3).unwrap();
        let dup = CycleWitness::new(vec![
            Vertex::left(0),
            Vertex::right(0),
            Vertex::left(0),
            Vertex::right(1),
        ]);
        let err = validate_cycle_witness(&g, &dup).unwrap_err();
        assert_eq!(err, WitnessViolation::DuplicateVertex(Vertex::left(0)));
        assert!(err.to_string().contains("duplicate vertex"));

        let same_side = CycleWitness::new(vec![
            Vertex::left(0),
            Vertex::left(1),
            Vertex::right(0),
            Vertex::right(1),
        ]);
        assert!(matches!(
            validate_cycle_witness(&g, &same_side),
            Err(WitnessViolation::SidesNotAlternating(..))
        ));
        let short = CycleWitness::new(vec![Vertex::left(0), Vertex::right(0)]);
        assert_eq!(validate_cycle_witness(&g, &short), Err(WitnessViolation::TooShort(2)));
        let far = CycleWitness::from_pairs(&[0, 5], &[0, 1]);
        assert!(matches!(
            validate_cycle_witness(&g, &far),
            Err(WitnessViolation::OutOfRange(_))
        ));
    }

    #[test]
    fn bicliques() {
        let g = BiGraph::from_edges(2, 2, &[(0, 0), (0, 1), (1, 0)]).unwrap();
        let ok = BicliqueWitness { left: vec![0], right: vec![0, 1] };
        assert_eq!(validate_biclique(&g, &ok), Ok(()));
        let bad = BicliqueWitness { left: vec![0, 1], right: vec![0, 1] };
        assert!(validate_biclique(&g, &bad).is_err());
    }
}
