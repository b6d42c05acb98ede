//! Machine-checkable JSON records of every claim the tool makes.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::canon::SymmetryFlags;
use crate::coloring::{Color, Coloring};
use crate::error::Result;
use crate::witness::{BicliqueWitness, CycleWitness};

pub const SCHEMA: &str = "bramsey-cert/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertKind {
    LowerWitness,
    UpperVerified,
    LemmaCheck,
    Spectrum,
    CnfExport,
}

/// One embedded witness object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum WitnessRecord {
    Cycle {
        color: Option<Color>,
        length: usize,
        vertices: CycleWitness,
    },
    Biclique {
        color: Option<Color>,
        #[serde(flatten)]
        witness: BicliqueWitness,
    },
    Coloring {
        rows: usize,
        cols: usize,
        pattern: Vec<String>,
    },
}

impl WitnessRecord {
    pub fn cycle(color: Option<Color>, w: &CycleWitness) -> WitnessRecord {
        WitnessRecord::Cycle {
            color,
            length: w.len(),
            vertices: w.clone(),
        }
    }

    pub fn coloring(c: &Coloring) -> WitnessRecord {
        WitnessRecord::Coloring {
            rows: c.rows(),
            cols: c.cols(),
            pattern: c.pattern(),
        }
    }
}

/// Run measurements; excluded from reproducibility comparisons.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub wall_ms: u64,
    pub timestamp: u64,
    pub counters: BTreeMap<String, u64>,
}

impl Stats {
    pub fn finished(elapsed: Duration, counters: BTreeMap<String, u64>) -> Stats {
        Stats {
            wall_ms: elapsed.as_millis() as u64,
            timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            counters,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: String,
    pub kind: CertKind,
    pub n: Option<usize>,
    pub m: Option<usize>,
    #[serde(rename = "N")]
    pub big_n: Option<usize>,
    pub verdict: String,
    pub symmetries: Vec<String>,
    pub witness_file: Option<String>,
    pub witnesses: Vec<WitnessRecord>,
    pub details: Value,
    pub stats: Stats,
    pub seed: Option<u64>,
}

impl Certificate {
    pub fn new(kind: CertKind, verdict: impl Into<String>) -> Certificate {
        Certificate {
            schema: SCHEMA.to_string(),
            kind,
            n: None,
            m: None,
            big_n: None,
            verdict: verdict.into(),
            symmetries: Vec::new(),
            witness_file: None,
            witnesses: Vec::new(),
            details: Value::Object(Default::default()),
            stats: Stats::default(),
            seed: None,
        }
    }

    pub fn with_params(mut self, n: Option<usize>, m: Option<usize>, big_n: Option<usize>) -> Certificate {
        self.n = n;
        self.m = m;
        self.big_n = big_n;
        self
    }

    pub fn with_symmetries(mut self, flags: SymmetryFlags) -> Certificate {
        self.symmetries = flags.names();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes") + "\n"
    }

    /// Everything except `stats`, for byte comparison across runs.
    pub fn reproducible_body(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("certificate serializes");
        if let Value::Object(map) = &mut v {
            map.remove("stats");
        }
        v
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<Certificate> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_body() {
        let c = Coloring::from_pattern(&["BR", "RB"]).unwrap();
        let mut cert = Certificate::new(CertKind::LowerWitness, "witness-found").with_params(Some(2), Some(2), Some(2));
        cert.witnesses.push(WitnessRecord::coloring(&c));
        cert.witnesses.push(WitnessRecord::cycle(
            Some(Color::Blue),
            &CycleWitness::from_pairs(&[0, 1], &[0, 1]),
        ));
        cert.stats.wall_ms = 5;
        let text = cert.to_json();
        assert!(text.contains("\"schema\": \"bramsey-cert/1\""));
        assert!(text.contains("\"kind\": \"lower-witness\""));
        assert!(text.contains("\"N\": 2"));
        assert!(text.contains("\"x0\""));
        let back: Certificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cert);
        let mut later = cert.clone();
        later.stats.wall_ms = 99;
        assert_eq!(later.reproducible_body(), cert.reproducible_body());
        assert!(cert.reproducible_body().get("stats").is_none());
    }
}
