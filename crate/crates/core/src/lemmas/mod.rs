//! Structural lemmas of the upper-bound argument as executable checks.
//!
//! Each checker takes one concrete instance, decides whether the lemma's
//! hypothesis holds there, and if so whether its conclusion does. A result
//! with the hypothesis met and the conclusion failing is a counterexample.
//! Suites in [`suite`] run the checkers over fixed instance families.

mod component;
mod edges;
mod extremal;
mod pancyclic;
mod rotation;
pub mod suite;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::certificate::{CertKind, Certificate, WitnessRecord};
use crate::error::{Error, Result};

pub use component::{blue_components, check_blue_component, ComponentWitness, SINGLETON_CONVENTION};
pub use edges::{check_edge_bounds, check_edge_bounds_with};
pub use extremal::{check_longest_cycle_bound, check_no_biclique, extremal_shape};
pub use pancyclic::check_pancyclicity;
pub use rotation::{check_rotation_exclusions, rotation_attachments, Exclusion, RotationInstance};
pub use suite::{run_suite, Suite, SuiteConfig, SuiteReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaId {
    /// Large blue component when there is no red `C_2m`.
    BlueComponent,
    /// No blue `K_{n-1,n-1}` in an avoiding coloring at the threshold.
    NoBiclique,
    /// Longest monochromatic cycles in an avoiding coloring at the threshold.
    LongestCycleBound,
    /// Adjacencies excluded around a longest cycle with an outside path.
    RotationExclusions,
    /// Edge counts relative to a longest cycle.
    EdgeBounds,
    /// Dense Hamiltonian bipartite graphs are bipancyclic.
    Pancyclicity,
}

impl LemmaId {
    pub fn name(self) -> &'static str {
        match self {
            LemmaId::BlueComponent => "blue-component",
            LemmaId::NoBiclique => "no-biclique",
            LemmaId::LongestCycleBound => "longest-cycle-bound",
            LemmaId::RotationExclusions => "rotation-exclusions",
            LemmaId::EdgeBounds => "edge-bounds",
            LemmaId::Pancyclicity => "pancyclicity",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<LemmaId> {
        serde_json::from_value(Value::String(s.into())).map_err(|_| Error::Parameters(format!("unknown lemma {s:?}")))
    }
}

/// Outcome of one checker on one instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LemmaCheck {
    pub lemma: LemmaId,
    pub instance: String,
    pub precondition_met: bool,
    /// Only meaningful when `precondition_met`.
    pub conclusion_held: bool,
    /// Why the hypothesis failed, or what the conclusion check found.
    pub notes: Vec<String>,
    pub witnesses: Vec<WitnessRecord>,
    pub details: Value,
}

impl LemmaCheck {
    pub(crate) fn new(lemma: LemmaId, instance: impl Into<String>) -> LemmaCheck {
        LemmaCheck {
            lemma,
            instance: instance.into(),
            precondition_met: false,
            conclusion_held: false,
            notes: Vec::new(),
            witnesses: Vec::new(),
            details: json!({}),
        }
    }

    pub(crate) fn vacuous(mut self, why: impl Into<String>) -> LemmaCheck {
        self.precondition_met = false;
        self.notes.push(why.into());
        self
    }

    pub fn is_violation(&self) -> bool {
        self.precondition_met && !self.conclusion_held
    }

    pub fn verdict(&self) -> &'static str {
        match (self.precondition_met, self.conclusion_held) {
            (false, _) => "vacuous",
            (true, true) => "held",
            (true, false) => "violated",
        }
    }

    pub fn to_certificate(&self) -> Certificate {
        let mut cert = Certificate::new(CertKind::LemmaCheck, self.verdict());
        cert.witnesses = self.witnesses.clone();
        cert.details = json!({
            "lemma": self.lemma,
            "instance": self.instance,
            "precondition_met": self.precondition_met,
            "conclusion_held": self.conclusion_held,
            "notes": self.notes,
            "check": self.details,
        });
        cert
    }
}
