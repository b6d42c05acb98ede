//! Plain bipartite graphs with bitset adjacency on both sides.
//!
//! The left side plays the role of the row vertices `x_0, x_1, ..` of a
//! coloring and the right side the column vertices `y_0, y_1, ..`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::{self, MAX_SIDE};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A vertex of a bipartite graph, written `x<i>` (left) or `y<j>` (right).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub side: Side,
    pub index: usize,
}

impl Vertex {
    pub const fn left(index: usize) -> Vertex {
        Vertex {
            side: Side::Left,
            index,
        }
    }

    pub const fn right(index: usize) -> Vertex {
        Vertex {
            side: Side::Right,
            index,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Left => write!(f, "x{}", self.index),
            Side::Right => write!(f, "y{}", self.index),
        }
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Vertex> {
        let bad = || Error::Parameters(format!("not a vertex label: {s:?}"));
        let (side, rest) = match s.as_bytes().first() {
            Some(b'x') => (Side::Left, &s[1..]),
            Some(b'y') => (Side::Right, &s[1..]),
            _ => return Err(bad()),
        };
        let index = rest.parse().map_err(|_| bad())?;
        Ok(Vertex { side, index })
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Vertex, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A bipartite graph with at most 64 vertices per side.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiGraph {
    left: usize,
    right: usize,
    left_adj: Vec<u64>,
    right_adj: Vec<u64>,
}

impl BiGraph {
    /// The edgeless graph on `left + right` vertices.
    pub fn empty(left: usize, right: usize) -> Result<BiGraph> {
        if left > MAX_SIDE || right > MAX_SIDE {
            return Err(Error::Parameters(format!(
                "sides {left}x{right} exceed the supported maximum of {MAX_SIDE}"
            )));
        }
        Ok(BiGraph {
            left,
            right,
            left_adj: vec![0; left],
            right_adj: vec![0; right],
        })
    }

    pub fn complete(left: usize, right: usize) -> Result<BiGraph> {
        let rows = vec![bits::full(right); left];
        BiGraph::from_rows(left, right, rows)
    }

    /// Build from left adjacency rows (bit `j` of `rows[i]` set iff `x_i y_j` is an edge).
    pub fn from_rows(left: usize, right: usize, rows: Vec<u64>) -> Result<BiGraph> {
        let mut g = BiGraph::empty(left, right)?;
        if rows.len() != left {
            return Err(Error::Shape(format!(
                "expected {left} adjacency rows, got {}",
                rows.len()
            )));
        }
        let mask = bits::full(right);
        for (i, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::Shape(format!(
                    "row {i} has neighbors outside 0..{right}"
                )));
            }
            for j in bits::members(row) {
                g.right_adj[j] |= bits::bit(i);
            }
        }
        g.left_adj = rows;
        Ok(g)
    }

    pub fn from_edges(left: usize, right: usize, edges: &[(usize, usize)]) -> Result<BiGraph> {
        let mut g = BiGraph::empty(left, right)?;
        for &(i, j) in edges {
            if i >= left || j >= right {
                return Err(Error::Shape(format!("edge x{i}y{j} out of range")));
            }
            g.add_edge(i, j);
        }
        Ok(g)
    }

    pub fn left_size(&self) -> usize {
        self.left
    }

    pub fn right_size(&self) -> usize {
        self.right
    }

    pub fn side_size(&self, side: Side) -> usize {
        match side {
            Side::Left => self.left,
            Side::Right => self.right,
        }
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        self.left_adj[i] |= bits::bit(j);
        self.right_adj[j] |= bits::bit(i);
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) {
        self.left_adj[i] &= !bits::bit(j);
        self.right_adj[j] &= !bits::bit(i);
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        bits::contains(self.left_adj[i], j)
    }

    /// Adjacency between two arbitrary vertices; same-side pairs are never adjacent.
    pub fn adjacent(&self, a: Vertex, b: Vertex) -> bool {
        if !self.contains(a) || !self.contains(b) {
            return false;
        }
        match (a.side, b.side) {
            (Side::Left, Side::Right) => self.has_edge(a.index, b.index),
            (Side::Right, Side::Left) => self.has_edge(b.index, a.index),
            _ => false,
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.index < self.side_size(v.side)
    }

    /// Right neighbors of left vertex `i`.
    #[inline]
    pub fn left_row(&self, i: usize) -> u64 {
        self.left_adj[i]
    }

    /// Left neighbors of right vertex `j`.
    #[inline]
    pub fn right_row(&self, j: usize) -> u64 {
        self.right_adj[j]
    }

    pub fn left_rows(&self) -> &[u64] {
        &self.left_adj
    }

    /// Neighborhood of `v`, as a set of vertices on the opposite side.
    pub fn neighbors(&self, v: Vertex) -> u64 {
        match v.side {
            Side::Left => self.left_adj[v.index],
            Side::Right => self.right_adj[v.index],
        }
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.left_adj.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.left_adj
            .iter()
            .enumerate()
            .flat_map(|(i, &row)| bits::members(row).map(move |j| (i, j)))
    }

    /// Subgraph keeping only the given vertices; indices are preserved.
    pub fn induced(&self, left_set: u64, right_set: u64) -> BiGraph {
        let mut g = self.clone();
        for i in 0..self.left {
            g.left_adj[i] = if bits::contains(left_set, i) {
                self.left_adj[i] & right_set
            } else {
                0
            };
        }
        for j in 0..self.right {
            g.right_adj[j] = if bits::contains(right_set, j) {
                self.right_adj[j] & left_set
            } else {
                0
            };
        }
        g
    }

    /// Swap the roles of the two sides.
    pub fn transpose(&self) -> BiGraph {
        BiGraph {
            left: self.right,
            right: self.left,
            left_adj: self.right_adj.clone(),
            right_adj: self.left_adj.clone(),
        }
    }

    /// Edges of `K_{left,right}` missing from this graph.
    pub fn complement(&self) -> BiGraph {
        let mask = bits::full(self.right);
        let rows = self.left_adj.iter().map(|r| !r & mask).collect();
        BiGraph::from_rows(self.left, self.right, rows).expect("same shape")
    }

    /// True iff every left vertex in `left_set` is adjacent to every right vertex in `right_set`.
    pub fn is_complete_between(&self, left_set: u64, right_set: u64) -> bool {
        bits::members(left_set).all(|i| self.left_adj[i] & right_set == right_set)
    }
}

impl fmt::Debug for BiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiGraph({}x{}", self.left, self.right)?;
        for (i, row) in self.left_adj.iter().enumerate() {
            write!(f, " x{i}:")?;
            for j in 0..self.right {
                f.write_str(if bits::contains(*row, j) { "1" } else { "." })?;
            }
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_labels_roundtrip() {
        for v in [Vertex::left(0), Vertex::right(13), Vertex::left(63)] {
            assert_eq!(v.to_string().parse::<Vertex>().unwrap(), v);
        }
        assert!("z1".parse::<Vertex>().is_err());
        assert!("x".parse::<Vertex>().is_err());
    }

    #[test]
    fn rows_and_columns_agree() {
        let g = BiGraph::from_edges(3, 4, &[(0, 1), (2, 1), (2, 3)]).unwrap();
        assert_eq!(g.right_row(1), 0b101);
        assert_eq!(g.edge_count(), 3);
        assert!(g.adjacent(Vertex::right(3), Vertex::left(2)));
        assert!(!g.adjacent(Vertex::left(0), Vertex::left(1)));
        let t = g.transpose();
        assert!(t.has_edge(3, 2));
        assert_eq!(g.complement().edge_count(), 12 - 3);
    }

    #[test]
    fn rejects_oversized_and_out_of_range() {
        assert!(BiGraph::empty(65, 1).is_err());
        assert!(BiGraph::from_edges(2, 2, &[(2, 0)]).is_err());
        assert!(BiGraph::from_rows(1, 2, vec![0b100]).is_err());
    }

    #[test]
    fn induced_keeps_indices() {
        let g = BiGraph::complete(3, 3).unwrap();
        let h = g.induced(0b101, 0b011);
        assert_eq!(h.edge_count(), 4);
        assert!(h.has_edge(2, 1));
        assert!(!h.has_edge(1, 1));
        assert_eq!(h.right_row(0), 0b101);
    }
}
