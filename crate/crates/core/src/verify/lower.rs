//! Witness search for lower bounds.
//!
//! The extremal constructions are tried first: a coloring that avoids both
//! targets stays avoiding on any sub-square. Otherwise cells are assigned
//! row by row, cutting any assignment that closes a target cycle through the
//! new edge, with rows kept in nondecreasing big-endian order.

use std::time::Instant;

use serde_json::json;

use super::{Mode, Verdict, VerifyReport};
use crate::coloring::{Color, Coloring};
use crate::constructions::{avoids_targets, construct_balanced, construct_unbalanced};
use crate::cycles::cycle_through_edge;
use crate::error::{Error, Result};
use crate::graph::BiGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LowerOptions {
    /// Search nodes allowed before giving up as inconclusive.
    pub budget: u64,
    /// Try the extremal constructions before searching.
    pub constructions: bool,
}

impl Default for LowerOptions {
    fn default() -> Self {
        LowerOptions {
            budget: 5_000_000,
            constructions: true,
        }
    }
}

/// Look for a coloring of `K_{N,N}` with no blue `C_2n` and no red `C_2m`.
///
/// Verdicts: `witness-found` (with the coloring), `exhausted-no-witness`
/// when the search space is covered, `inconclusive` when the budget runs out.
pub fn search_lower(n: usize, m: usize, big_n: usize, opts: &LowerOptions) -> Result<VerifyReport> {
    if n < 2 || m < 2 || big_n == 0 || big_n > 64 {
        return Err(Error::Parameters(format!("need n, m >= 2 and 1 <= N <= 64, got n={n} m={m} N={big_n}")));
    }
    let start = Instant::now();
    let construction = largest_construction(n, m)?;
    let side = construction.as_ref().map_or(0, |(_, c)| c.rows());
    let mut report = VerifyReport::new(Mode::LowerSearch, n, m, big_n, Verdict::Inconclusive);
    let mut details = json!({
        "construction": construction.as_ref().map(|(name, _)| name.clone()),
        "construction_side": side,
    });
    if opts.constructions {
        if let Some((name, c)) = &construction {
            if side >= big_n {
                let w = c.restrict(big_n, big_n)?;
                debug_assert!(avoids_targets(&w, n, m));
                report.verdict = Verdict::WitnessFound;
                report.witness = Some(w);
                report.canonical_classes = 1;
                details["source"] = json!(name);
                report.details = details;
                report.wall_ms = start.elapsed().as_millis() as u64;
                return Ok(report);
            }
        }
    }
    let mut s = Backtrack {
        n,
        m,
        big_n,
        blue: BiGraph::empty(big_n, big_n)?,
        red: BiGraph::empty(big_n, big_n)?,
        nodes: 0,
        budget: opts.budget,
        out_of_budget: false,
    };
    let found = s.assign(0, 0, true);
    report.counters.insert("nodes".into(), s.nodes);
    report.canonical_classes = s.nodes;
    details["source"] = json!("backtracking");
    report.symmetries = vec!["row-permutations".into()];
    if let Some(found) = found {
        debug_assert!(avoids_targets(&found, n, m));
        report.verdict = Verdict::WitnessFound;
        report.witness = Some(found);
    } else if s.out_of_budget {
        report.verdict = Verdict::Inconclusive;
        details["budget"] = json!(opts.budget);
    } else {
        report.verdict = Verdict::ExhaustedNoWitness;
    }
    report.details = details;
    report.wall_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// The largest extremal coloring available for `(n, m)`, colors swapped
/// when `n < m`.
fn largest_construction(n: usize, m: usize) -> Result<Option<(String, Coloring)>> {
    Ok(Some(if n > m {
        (format!("unbalanced({n},{m})"), construct_unbalanced(n, m)?)
    } else if n < m {
        (format!("unbalanced({m},{n}) color-swapped"), construct_unbalanced(m, n)?.swap_colors())
    } else {
        (format!("balanced({m})"), construct_balanced(m)?)
    }))
}

struct Backtrack {
    n: usize,
    m: usize,
    big_n: usize,
    blue: BiGraph,
    red: BiGraph,
    nodes: u64,
    budget: u64,
    out_of_budget: bool,
}

impl Backtrack {
    // `tied`: row i agrees with row i-1 on columns 0..j
    fn assign(&mut self, i: usize, j: usize, tied: bool) -> Option<Coloring> {
        if i == self.big_n {
            let blue = self.blue.left_rows().to_vec();
            return Some(Coloring::from_blue_rows(self.big_n, self.big_n, blue).expect("valid rows"));
        }
        if j == self.big_n {
            return self.assign(i + 1, 0, i + 1 < self.big_n);
        }
        let above_blue = i > 0 && self.blue.has_edge(i - 1, j);
        for color in [Color::Red, Color::Blue] {
            // big-endian rows nondecreasing: while tied, a blue above forces blue
            if tied && i > 0 && above_blue && color == Color::Red {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                self.out_of_budget = true;
                return None;
            }
            let (g, len) = match color {
                Color::Blue => (&mut self.blue, 2 * self.n),
                Color::Red => (&mut self.red, 2 * self.m),
            };
            g.add_edge(i, j);
            let closes = cycle_through_edge(g, i, j, len).is_some();
            if !closes {
                let still_tied = tied && i > 0 && (color == Color::Blue) == above_blue;
                if let Some(c) = self.assign(i, j + 1, still_tied) {
                    return Some(c);
                }
            }
            match color {
                Color::Blue => self.blue.remove_edge(i, j),
                Color::Red => self.red.remove_edge(i, j),
            }
            if self.out_of_budget {
                return None;
            }
        }
        None
    }
}
