//! Two complete (or nearly complete) bipartite blocks joined by two edges.
//!
//! For two complete blocks `(A1, B1)` and `(A2, B2)` the graph is laid out with
//! left side `A1 ∪ B2` and right side `B1 ∪ A2`, so that both blocks and the
//! connecting edges are left-right pairs:
//!
//! ```text
//! left:  A1 = 0..a1,        B2 = a1..a1+b2
//! right: B1 = 0..b1,        A2 = b1..b1+a2
//! ```

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{cycle_spectrum, find_cycle, SpectrumReport};
use crate::error::{Error, Result};
use crate::graph::{BiGraph, Vertex};
use crate::witness::{validate_cycle_witness, CycleWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Connector {
    /// One edge between `A1` and `A2` and one between `B1` and `B2`.
    CrossPair,
    /// Two disjoint edges between `A1` and `A2`.
    TwoDisjoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlueSpec {
    pub a1: usize,
    pub b1: usize,
    pub a2: usize,
    pub b2: usize,
    pub connector: Connector,
}

/// Witnessed guaranteed lengths plus the lengths the graph realizes outside
/// the guarantee.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlueReport {
    pub guaranteed: SpectrumReport,
    /// Realized lengths not covered by the guarantee (4, or above the bound).
    pub unguaranteed: BTreeSet<usize>,
}

impl GlueSpec {
    fn check(&self) -> Result<()> {
        if self.a1 == 0 || self.b1 == 0 || self.a2 == 0 || self.b2 == 0 {
            return Err(Error::Parameters(format!("block sizes must be positive: {self:?}")));
        }
        if self.connector == Connector::TwoDisjoint && (self.a1 < 2 || self.a2 < 2) {
            return Err(Error::Parameters(
                "two disjoint A1-A2 edges need |A1|, |A2| >= 2".into(),
            ));
        }
        if self.a1 + self.b2 > 64 || self.b1 + self.a2 > 64 {
            return Err(Error::Parameters("glued graph exceeds 64 vertices per side".into()));
        }
        Ok(())
    }

    fn a1(&self, k: usize) -> Vertex {
        Vertex::left(k)
    }
    fn b2(&self, k: usize) -> Vertex {
        Vertex::left(self.a1 + k)
    }
    fn b1(&self, k: usize) -> Vertex {
        Vertex::right(k)
    }
    fn a2(&self, k: usize) -> Vertex {
        Vertex::right(self.b1 + k)
    }

    /// The materialized graph.
    pub fn graph(&self) -> Result<BiGraph> {
        self.check()?;
        let mut g = BiGraph::empty(self.a1 + self.b2, self.b1 + self.a2)?;
        for i in 0..self.a1 {
            for j in 0..self.b1 {
                g.add_edge(i, j);
            }
        }
        for i in 0..self.b2 {
            for j in 0..self.a2 {
                g.add_edge(self.a1 + i, self.b1 + j);
            }
        }
        match self.connector {
            Connector::CrossPair => {
                g.add_edge(0, self.b1); // A1[0] - A2[0]
                g.add_edge(self.a1, 0); // B2[0] - B1[0]
            }
            Connector::TwoDisjoint => {
                g.add_edge(0, self.b1);
                g.add_edge(1, self.b1 + 1);
            }
        }
        Ok(g)
    }

    /// Upper end of the guaranteed interval (the interval starts at 6).
    pub fn guaranteed_max(&self) -> usize {
        match self.connector {
            Connector::CrossPair => 2 * (self.a1.min(self.b1) + self.a2.min(self.b2)),
            Connector::TwoDisjoint => {
                (2 * self.a1 - 1).min(2 * self.b1 + 1) + (2 * self.a2 - 1).min(2 * self.b2 + 1)
            }
        }
    }

    pub fn guaranteed_lengths(&self) -> Vec<usize> {
        (6..=self.guaranteed_max()).step_by(2).collect()
    }

    /// Explicit witness of length `len` built from two block paths.
    fn witness(&self, len: usize) -> Option<CycleWitness> {
        let mut v = Vec::with_capacity(len);
        match self.connector {
            Connector::CrossPair => {
                // A1[0] .. B1[0] with k per side, then B2[0] .. A2[0] with l per side
                let half = len / 2;
                let k = (1..=self.a1.min(self.b1)).find(|&k| {
                    let l = half - k.min(half);
                    l >= 1 && l <= self.a2.min(self.b2)
                })?;
                let l = half - k;
                for t in 0..k {
                    v.push(self.a1(t));
                    v.push(self.b1((t + 1) % k));
                }
                for t in 0..l {
                    v.push(self.b2(t));
                    v.push(self.a2((t + 1) % l));
                }
            }
            Connector::TwoDisjoint => {
                // A1[0] .. A1[1] with j left vertices, then A2[1] .. A2[0] with l
                let total = len / 2 + 1; // j + l
                let j_max = self.a1.min(self.b1 + 1);
                let l_max = self.a2.min(self.b2 + 1);
                let j = (2..=j_max).find(|&j| total >= j + 2 && total - j <= l_max)?;
                let l = total - j;
                let mut lefts = vec![0];
                lefts.extend(2..j);
                lefts.push(1);
                for (t, &a) in lefts.iter().enumerate() {
                    v.push(self.a1(a));
                    if t + 1 < lefts.len() {
                        v.push(self.b1(t));
                    }
                }
                let mut rights = vec![1];
                rights.extend(2..l);
                rights.push(0);
                for (t, &a) in rights.iter().enumerate() {
                    v.push(self.a2(a));
                    if t + 1 < rights.len() {
                        v.push(self.b2(t));
                    }
                }
            }
        }
        Some(CycleWitness::new(v))
    }
}

/// Materialize the glued graph and witness every guaranteed length.
pub fn glue_complete_pairs(spec: &GlueSpec) -> Result<GlueReport> {
    let g = spec.graph()?;
    let mut guaranteed = SpectrumReport::default();
    for len in spec.guaranteed_lengths() {
        let w = spec
            .witness(len)
            .ok_or_else(|| Error::Precondition(format!("no path split for length {len}")))?;
        validate_cycle_witness(&g, &w)
            .map_err(|e| Error::Precondition(format!("length {len} witness invalid: {e}")))?;
        guaranteed.insert(w);
    }
    let unguaranteed = cycle_spectrum(&g)
        .lengths
        .into_iter()
        .filter(|l| !guaranteed.lengths.contains(l))
        .collect();
    Ok(GlueReport {
        guaranteed,
        unguaranteed,
    })
}

/// Two near-complete blocks `G(A, B)`, `H(C, D)` joined by the edges
/// `A[0]C[0]` and `A[1]C[1]`. Layout: left `A ∪ D`, right `B ∪ C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NearCompleteSpec {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    /// For each vertex of `A`, the vertex of `B` it misses, if any.
    pub a_missing: Vec<Option<usize>>,
    /// For each vertex of `C`, the vertex of `D` it misses, if any.
    pub c_missing: Vec<Option<usize>>,
}

impl NearCompleteSpec {
    pub fn complete(a: usize, b: usize, c: usize, d: usize) -> NearCompleteSpec {
        NearCompleteSpec {
            a,
            b,
            c,
            d,
            a_missing: vec![None; a],
            c_missing: vec![None; c],
        }
    }

    fn check(&self) -> Result<()> {
        if self.b < 4 || self.d < 4 {
            return Err(Error::Precondition(format!(
                "need |B|, |D| >= 4, got {} and {}",
                self.b, self.d
            )));
        }
        if self.a < 2 || self.c < 2 {
            return Err(Error::Precondition(
                "two disjoint A-C edges need |A|, |C| >= 2".into(),
            ));
        }
        if self.a_missing.len() != self.a || self.c_missing.len() != self.c {
            return Err(Error::Precondition("deficiency pattern has the wrong length".into()));
        }
        if self.a_missing.iter().flatten().any(|&k| k >= self.b)
            || self.c_missing.iter().flatten().any(|&k| k >= self.d)
        {
            return Err(Error::Precondition("deficiency index out of range".into()));
        }
        if self.a + self.d > 64 || self.b + self.c > 64 {
            return Err(Error::Precondition("graph exceeds 64 vertices per side".into()));
        }
        Ok(())
    }

    pub fn graph(&self) -> Result<BiGraph> {
        self.check()?;
        let mut g = BiGraph::empty(self.a + self.d, self.b + self.c)?;
        for (i, miss) in self.a_missing.iter().enumerate() {
            for j in 0..self.b {
                if *miss != Some(j) {
                    g.add_edge(i, j);
                }
            }
        }
        for (k, miss) in self.c_missing.iter().enumerate() {
            for l in 0..self.d {
                if *miss != Some(l) {
                    g.add_edge(self.a + l, self.b + k);
                }
            }
        }
        g.add_edge(0, self.b);
        g.add_edge(1, self.b + 1);
        Ok(g)
    }

    pub fn guaranteed_max(&self) -> usize {
        (2 * self.a).min(2 * self.b) + (2 * self.c).min(2 * self.d) - 2
    }

    pub fn guaranteed_lengths(&self) -> Vec<usize> {
        (6..=self.guaranteed_max()).step_by(2).collect()
    }
}

/// Witness every length in `6..=min{2a,2b}+min{2c,2d}-2` by exact search.
/// A guaranteed length without a cycle is reported as missing, not as an error.
pub fn near_complete_glue_check(spec: &NearCompleteSpec) -> Result<NearCompleteReport> {
    let g = spec.graph()?;
    let mut guaranteed = SpectrumReport::default();
    let mut missing = Vec::new();
    for len in spec.guaranteed_lengths() {
        match find_cycle(&g, len) {
            Some(w) => guaranteed.insert(w),
            None => missing.push(len),
        }
    }
    Ok(NearCompleteReport { guaranteed, missing })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NearCompleteReport {
    pub guaranteed: SpectrumReport,
    /// Guaranteed lengths with no cycle; nonempty would contradict the lemma.
    pub missing: Vec<usize>,
}
