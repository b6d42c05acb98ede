//! Desk-scale verification of `br(C_2n, C_2m)`.

pub mod cegar;
pub mod cnf;
pub mod exhaustive;
pub mod lower;
pub mod sample;
pub mod solver;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::certificate::{CertKind, Certificate, Stats, WitnessRecord};
use crate::coloring::Coloring;
use crate::error::{Error, Result};

pub use cegar::{cegar_verify, CegarOptions};
pub use cnf::{export_cnf, BlockedCycle, CnfDocument};
pub use exhaustive::{exhaustive_upper, ExhaustiveOptions, DEFAULT_GATE};
pub use lower::{search_lower, LowerOptions};
pub use sample::{random_sample_upper, SampleOptions};
pub use solver::{parse_model, SatBackend, SolverCommand, SolverOutcome, SOLVER_ENV};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    ExhaustiveUpper,
    LowerSearch,
    Cegar,
    RandomSample,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Verified,
    WitnessFound,
    ExhaustedNoWitness,
    Unsat,
    Sat,
    Inconclusive,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("mode serializes");
        f.write_str(s.as_str().expect("string"))
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("verdict serializes");
        f.write_str(s.as_str().expect("string"))
    }
}

impl std::str::FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Verdict> {
        serde_json::from_value(Value::String(s.to_string()))
            .map_err(|_| Error::Parameters(format!("unknown verdict {s:?}")))
    }
}

/// Outcome of one verification run.
#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub mode: Mode,
    pub n: usize,
    pub m: usize,
    pub big_n: usize,
    pub verdict: Verdict,
    /// Canonical classes reached (exhaustive mode) or colorings examined.
    pub canonical_classes: u64,
    pub witness: Option<Coloring>,
    /// Deterministic work measures.
    pub counters: BTreeMap<String, u64>,
    /// Mode specific results, deterministic for fixed inputs.
    pub details: Value,
    /// Symmetries quotiented out, as certificate names.
    pub symmetries: Vec<String>,
    pub seed: Option<u64>,
    pub wall_ms: u64,
}

impl VerifyReport {
    pub(crate) fn new(mode: Mode, n: usize, m: usize, big_n: usize, verdict: Verdict) -> VerifyReport {
        VerifyReport {
            mode,
            n,
            m,
            big_n,
            verdict,
            canonical_classes: 0,
            witness: None,
            counters: BTreeMap::new(),
            details: json!({}),
            symmetries: Vec::new(),
            seed: None,
            wall_ms: 0,
        }
    }

    /// Report content without timing, as canonical JSON text.
    pub fn body_json(&self) -> String {
        let mut cert = self.to_certificate();
        cert.stats = Stats::default();
        serde_json::to_string(&cert.reproducible_body()).expect("serializes")
    }

    pub fn to_certificate(&self) -> Certificate {
        let kind = match (self.mode, self.verdict) {
            (_, Verdict::WitnessFound) | (_, Verdict::Sat) => CertKind::LowerWitness,
            (Mode::LowerSearch, _) => CertKind::LowerWitness,
            _ => CertKind::UpperVerified,
        };
        let mut cert = Certificate::new(kind, self.verdict.to_string())
            .with_params(Some(self.n), Some(self.m), Some(self.big_n));
        cert.symmetries = self.symmetries.clone();
        if let Some(w) = &self.witness {
            cert.witnesses.push(WitnessRecord::coloring(w));
        }
        let mut details = json!({
            "mode": self.mode,
            "canonical_classes": self.canonical_classes,
            "counters": self.counters,
        });
        if let (Value::Object(d), Value::Object(extra)) = (&mut details, &self.details) {
            for (k, v) in extra {
                d.insert(k.clone(), v.clone());
            }
        }
        cert.details = details;
        cert.seed = self.seed;
        cert.stats.wall_ms = self.wall_ms;
        cert.stats.counters = self.counters.clone();
        cert
    }
}

/// Known values of `br(C_2n, C_2m)` for `n, m >= 2`, from the table of small
/// cases (`m <= 4`) and the general formula for `n, m >= 5`. Symmetric in
/// `(n, m)` since swapping colors exchanges the two targets.
pub fn known_value(n: usize, m: usize) -> Option<usize> {
    if n < 2 || m < 2 {
        return None;
    }
    let (n, m) = if n >= m { (n, m) } else { (m, n) };
    Some(match m {
        2 if n <= 3 => 5,
        2 => n + 1,
        3 if n == 3 => 6,
        3 => n + 2,
        4 if n == 4 => 8,
        4 => n + 3,
        _ if n == m => 2 * m,
        _ => n + m - 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table() {
        assert_eq!(known_value(2, 2), Some(5));
        assert_eq!(known_value(3, 2), Some(5));
        assert_eq!(known_value(4, 2), Some(5));
        assert_eq!(known_value(7, 2), Some(8));
        assert_eq!(known_value(3, 3), Some(6));
        assert_eq!(known_value(5, 3), Some(7));
        assert_eq!(known_value(4, 4), Some(8));
        assert_eq!(known_value(6, 4), Some(9));
        assert_eq!(known_value(5, 5), Some(10));
        assert_eq!(known_value(6, 5), Some(10));
        assert_eq!(known_value(5, 6), Some(10));
        assert_eq!(known_value(1, 3), None);
    }

    #[test]
    fn verdict_names() {
        assert_eq!(Verdict::ExhaustedNoWitness.to_string(), "exhausted-no-witness");
        assert_eq!("witness-found".parse::<Verdict>().unwrap(), Verdict::WitnessFound);
        assert!("maybe".parse::<Verdict>().is_err());
    }
}
