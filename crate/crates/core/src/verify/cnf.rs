//! DIMACS encoding of "no blue `C_2n` and no red `C_2m`" on `K_{N,N}`.
//!
//! Variable `i*N + j + 1` is true iff `x_i y_j` is blue. Each blocked cycle
//! becomes one clause. Optional symmetry breaking orders the rows
//! lexicographically with one auxiliary "still equal" variable per
//! adjacent row pair and column.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{BiGraph, Side};
use crate::witness::{validate_cycle_witness, CycleWitness};

/// A cycle that must not appear in the given color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockedCycle {
    pub color: Color,
    pub cycle: CycleWitness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfDocument {
    pub n: usize,
    pub m: usize,
    pub big_n: usize,
    pub num_vars: usize,
    pub clauses: Vec<Vec<i32>>,
    pub blocked_blue: usize,
    pub blocked_red: usize,
    pub symmetry_breaking: bool,
}

impl CnfDocument {
    /// The variable of edge `x_i y_j`.
    pub fn var(&self, i: usize, j: usize) -> i32 {
        (i * self.big_n + j + 1) as i32
    }

    /// Add one more blocked cycle; errors as in [`export_cnf`].
    pub fn block(&mut self, b: &BlockedCycle) -> Result<()> {
        let target = match b.color {
            Color::Blue => 2 * self.n,
            Color::Red => 2 * self.m,
        };
        if b.cycle.len() != target {
            return Err(Error::Parameters(format!(
                "{} cycle of length {} does not match the target length {target}",
                b.color,
                b.cycle.len()
            )));
        }
        let host = BiGraph::complete(self.big_n, self.big_n)?;
        validate_cycle_witness(&host, &b.cycle).map_err(|v| Error::Parameters(format!("blocked cycle: {v}")))?;
        let clause = b
            .cycle
            .edges()
            .map(|(a, c)| {
                let (i, j) = match a.side {
                    Side::Left => (a.index, c.index),
                    Side::Right => (c.index, a.index),
                };
                let v = self.var(i, j);
                match b.color {
                    Color::Blue => -v,
                    Color::Red => v,
                }
            })
            .collect();
        self.clauses.push(clause);
        match b.color {
            Color::Blue => self.blocked_blue += 1,
            Color::Red => self.blocked_red += 1,
        }
        Ok(())
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        writeln!(out, "c bramsey n={} m={} N={}", self.n, self.m, self.big_n).unwrap();
        writeln!(out, "c blocked blue={} red={}", self.blocked_blue, self.blocked_red).unwrap();
        if self.symmetry_breaking {
            writeln!(out, "c symmetry-breaking row-lex").unwrap();
        }
        writeln!(out, "p cnf {} {}", self.num_vars, self.clauses.len()).unwrap();
        for c in &self.clauses {
            for lit in c {
                write!(out, "{lit} ").unwrap();
            }
            out.push_str("0\n");
        }
        out
    }

    /// Read a coloring back from a model (a set of true literals).
    pub fn decode(&self, model: &[i32]) -> Coloring {
        let mut truth = vec![false; self.num_vars + 1];
        for &lit in model {
            let v = lit.unsigned_abs() as usize;
            if lit > 0 && v < truth.len() {
                truth[v] = true;
            }
        }
        let nn = self.big_n;
        let blue = (0..nn)
            .map(|i| (0..nn).filter(|&j| truth[self.var(i, j) as usize]).fold(0u64, |acc, j| acc | 1 << j))
            .collect();
        Coloring::from_blue_rows(nn, nn, blue).expect("valid rows")
    }

    /// True iff the coloring satisfies every clause (auxiliaries chosen freely).
    pub fn satisfied_by(&self, c: &Coloring) -> bool {
        let primary = self.big_n * self.big_n;
        let mut model: Vec<i32> = (0..self.big_n)
            .flat_map(|i| (0..self.big_n).map(move |j| (i, j)))
            .map(|(i, j)| {
                let v = self.var(i, j);
                if c.color(i, j) == Color::Blue {
                    v
                } else {
                    -v
                }
            })
            .collect();
        if self.symmetry_breaking {
            // the intended value of each auxiliary: rows agree so far
            for i in 0..self.big_n.saturating_sub(1) {
                let mut eq = true;
                for j in 0..self.big_n - 1 {
                    eq &= c.color(i, j) == c.color(i + 1, j);
                    let v = (primary + i * (self.big_n - 1) + j + 1) as i32;
                    model.push(if eq { v } else { -v });
                }
            }
        }
        let truth: std::collections::HashSet<i32> = model.into_iter().collect();
        self.clauses.iter().all(|cl| cl.iter().any(|l| truth.contains(l)))
    }
}

/// Encode the avoidance problem on `K_{N,N}` with the given cycles blocked.
///
/// Each blocked cycle must alternate sides, stay within `N`, and have the
/// target length of its color (`2n` blue, `2m` red).
pub fn export_cnf(
    n: usize,
    m: usize,
    big_n: usize,
    blocked: &[BlockedCycle],
    symmetry_breaking: bool,
) -> Result<CnfDocument> {
    if n < 2 || m < 2 || big_n == 0 || big_n > 64 {
        return Err(Error::Parameters(format!("need n, m >= 2 and 1 <= N <= 64, got n={n} m={m} N={big_n}")));
    }
    let primary = big_n * big_n;
    let aux = if symmetry_breaking { big_n.saturating_sub(1) * (big_n - 1) } else { 0 };
    let mut doc = CnfDocument {
        n,
        m,
        big_n,
        num_vars: primary + aux,
        clauses: Vec::new(),
        blocked_blue: 0,
        blocked_red: 0,
        symmetry_breaking,
    };
    for b in blocked {
        doc.block(b)?;
    }
    if symmetry_breaking {
        for i in 0..big_n - 1 {
            // e(j): rows i and i+1 agree on columns 0..=j
            let e = |j: usize| (primary + i * (big_n - 1) + j + 1) as i32;
            for j in 0..big_n {
                let r = doc.var(i, j);
                let s = doc.var(i + 1, j);
                let prev: Vec<i32> = if j == 0 { vec![] } else { vec![-e(j - 1)] };
                // agreeing so far forces r <= s here
                let mut cl = prev.clone();
                cl.extend([-r, s]);
                doc.clauses.push(cl);
                if j + 1 < big_n {
                    let mut both_blue = prev.clone();
                    both_blue.extend([-r, -s, e(j)]);
                    doc.clauses.push(both_blue);
                    let mut both_red = prev;
                    both_red.extend([r, s, e(j)]);
                    doc.clauses.push(both_red);
                }
            }
        }
    }
    Ok(doc)
}
