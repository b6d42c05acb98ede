//! The two extremal colorings that give the lower bounds
//! `br(C_2n, C_2m) >= n + m - 1` for `n > m` and `>= 2m` for `n = m`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::certificate::{CertKind, Certificate, WitnessRecord};
use crate::coloring::{Color, Coloring};
use crate::cycles::{find_cycle, longest_even_cycle};
use crate::error::{Error, Result};
use crate::witness::CycleWitness;

/// Named index ranges of one side.
pub type Blocks = Vec<(&'static str, std::ops::Range<usize>)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Unbalanced,
    Balanced,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::Unbalanced => "unbalanced",
            FamilyKind::Balanced => "balanced",
        })
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilyKind> {
        match s {
            "unbalanced" => Ok(FamilyKind::Unbalanced),
            "balanced" => Ok(FamilyKind::Balanced),
            _ => Err(Error::Parameters(format!("unknown family {s:?}"))),
        }
    }
}

/// A member of one of the two extremal families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalFamily {
    pub kind: FamilyKind,
    pub n: usize,
    pub m: usize,
}

impl ExtremalFamily {
    pub fn new(kind: FamilyKind, n: usize, m: usize) -> Result<ExtremalFamily> {
        let ok = match kind {
            FamilyKind::Unbalanced => n > m && m >= 2,
            FamilyKind::Balanced => n == m && m >= 2,
        };
        if !ok {
            let need = match kind {
                FamilyKind::Unbalanced => "n > m >= 2",
                FamilyKind::Balanced => "n = m >= 2",
            };
            return Err(Error::Parameters(format!("{kind} family needs {need}, got n={n} m={m}")));
        }
        Ok(ExtremalFamily { kind, n, m })
    }

    /// The smallest `N` the coloring does not reach; the coloring has side `N - 1`.
    pub fn ramsey_bound(&self) -> usize {
        match self.kind {
            FamilyKind::Unbalanced => self.n + self.m - 1,
            FamilyKind::Balanced => 2 * self.m,
        }
    }

    /// Named row and column blocks as `(name, range)` pairs.
    pub fn blocks(&self) -> (Blocks, Blocks) {
        let (n, m) = (self.n, self.m);
        match self.kind {
            FamilyKind::Unbalanced => (
                vec![("X1", 0..m - 1), ("X2", m - 1..m + n - 2)],
                vec![("Y", 0..n + m - 2)],
            ),
            FamilyKind::Balanced => (
                vec![("X1", 0..m - 1), ("X2", m - 1..2 * m - 2), ("x", 2 * m - 2..2 * m - 1)],
                vec![("Y1", 0..m - 1), ("Y2", m - 1..2 * m - 2), ("y", 2 * m - 2..2 * m - 1)],
            ),
        }
    }

    pub fn coloring(&self) -> Result<Coloring> {
        match self.kind {
            FamilyKind::Unbalanced => construct_unbalanced(self.n, self.m),
            FamilyKind::Balanced => construct_balanced(self.m),
        }
    }
}

/// `m-1` all-red rows (`X1`) above `n-1` all-blue rows (`X2`), with `n+m-2` columns.
pub fn construct_unbalanced(n: usize, m: usize) -> Result<Coloring> {
    ExtremalFamily::new(FamilyKind::Unbalanced, n, m)?;
    let side = n + m - 2;
    let mut c = Coloring::uniform(side, side, Color::Red)?;
    for i in m - 1..side {
        for j in 0..side {
            c.set(i, j, Color::Blue);
        }
    }
    Ok(c)
}

/// Blocks `X1, X2, Y1, Y2` of size `m-1` and special vertices `x`, `y` last.
/// Red: `X1×Y1`, `X2×Y2` and every edge at `x`. Blue: `X1×Y2`, `X2×Y1`, `(X1∪X2)×{y}`.
pub fn construct_balanced(m: usize) -> Result<Coloring> {
    ExtremalFamily::new(FamilyKind::Balanced, m, m)?;
    let k = m - 1;
    let side = 2 * m - 1;
    let mut c = Coloring::uniform(side, side, Color::Red)?;
    for i in 0..2 * k {
        for j in 0..2 * k {
            // X1 = 0..k against Y2 = k..2k, X2 against Y1
            if (i < k) != (j < k) {
                c.set(i, j, Color::Blue);
            }
        }
        c.set(i, side - 1, Color::Blue);
    }
    Ok(c)
}

/// Outcome of checking both target cycles on a coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalCheck {
    pub blue_cycle: Option<CycleWitness>,
    pub red_cycle: Option<CycleWitness>,
    pub blue_longest: usize,
    pub red_longest: usize,
}

impl ExtremalCheck {
    pub fn extremal(&self) -> bool {
        self.blue_cycle.is_none() && self.red_cycle.is_none()
    }
}

/// True iff `c` has neither a blue `C_2n` nor a red `C_2m`.
pub fn avoids_targets(c: &Coloring, n: usize, m: usize) -> bool {
    find_cycle(&c.view(Color::Blue), 2 * n).is_none() && find_cycle(&c.view(Color::Red), 2 * m).is_none()
}

pub fn check_extremal(c: &Coloring, n: usize, m: usize) -> ExtremalCheck {
    let blue = c.view(Color::Blue);
    let red = c.view(Color::Red);
    ExtremalCheck {
        blue_cycle: find_cycle(&blue, 2 * n),
        red_cycle: find_cycle(&red, 2 * m),
        blue_longest: longest_even_cycle(&blue).longest,
        red_longest: longest_even_cycle(&red).longest,
    }
}

/// Certificate with verdict `extremal` iff the blue view has no `C_2n` and
/// the red view has no `C_2m`, decided by search. Offending cycles are embedded.
pub fn certify_extremal(c: &Coloring, n: usize, m: usize) -> Certificate {
    let check = check_extremal(c, n, m);
    let verdict = if check.extremal() { "extremal" } else { "not-extremal" };
    let mut cert = Certificate::new(CertKind::LowerWitness, verdict).with_params(Some(n), Some(m), Some(c.rows() + 1));
    cert.witnesses.push(WitnessRecord::coloring(c));
    if let Some(w) = &check.blue_cycle {
        cert.witnesses.push(WitnessRecord::cycle(Some(Color::Blue), w));
    }
    if let Some(w) = &check.red_cycle {
        cert.witnesses.push(WitnessRecord::cycle(Some(Color::Red), w));
    }
    cert.details = json!({
        "rows": c.rows(),
        "cols": c.cols(),
        "blue_longest_cycle": check.blue_longest,
        "red_longest_cycle": check.red_longest,
        "blue_target_length": 2 * n,
        "red_target_length": 2 * m,
    });
    cert
}
