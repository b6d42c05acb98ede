//! Lemma suites over fixed instance sources.
//!
//! Every source is deterministic: exhaustive small shapes, canonical
//! representatives, the extremal constructions and seeded random instances
//! (ChaCha8, one stream per instance). Instances are checked in parallel and
//! merged in instance order.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{
    check_blue_component, check_edge_bounds, check_longest_cycle_bound, check_no_biclique, check_pancyclicity,
    check_rotation_exclusions, extremal_shape, rotation_attachments, LemmaCheck,
};
use crate::canon::{canonical_representatives, SymmetryFlags};
use crate::certificate::{CertKind, Certificate};
use crate::coloring::{serialize_coloring, Color, Coloring};
use crate::constructions::{construct_balanced, construct_unbalanced};
use crate::cycles::longest_even_cycle;
use crate::error::{Error, Result};
use crate::graph::BiGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Component,
    Biclique,
    Longest,
    Rotation,
    Edges,
    Pancyclic,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Component,
        Suite::Biclique,
        Suite::Longest,
        Suite::Rotation,
        Suite::Edges,
        Suite::Pancyclic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Component => "component",
            Suite::Biclique => "biclique",
            Suite::Longest => "longest",
            Suite::Rotation => "rotation",
            Suite::Edges => "edges",
            Suite::Pancyclic => "pancyclic",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parameters(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Instances drawn by each seeded random source.
    pub random_instances: usize,
    /// Reproducers for violations go here when set.
    pub dump_dir: Option<PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 2024,
            random_instances: 1000,
            dump_dir: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SourceSummary {
    pub name: String,
    pub instances: u64,
    pub precondition_met: u64,
    pub violations: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub instances: u64,
    pub precondition_met: u64,
    pub violations: u64,
    pub sources: Vec<SourceSummary>,
    /// The first few violations in instance order.
    pub examples: Vec<LemmaCheck>,
    pub reproducers: Vec<String>,
}

impl SuiteReport {
    /// No violations and at least one instance meeting the hypothesis.
    pub fn passed(&self) -> bool {
        self.violations == 0 && self.precondition_met > 0
    }

    pub fn status(&self) -> &'static str {
        if self.violations > 0 {
            "violated"
        } else if self.precondition_met == 0 {
            "vacuous"
        } else {
            "passed"
        }
    }

    pub fn to_certificate(&self) -> Certificate {
        let mut cert = Certificate::new(CertKind::LemmaCheck, self.status());
        cert.details = serde_json::to_value(self).expect("report serializes");
        cert
    }
}

const EXAMPLES_KEPT: usize = 5;

/// One checked instance plus the object to dump if it is a violation.
type Checked = (LemmaCheck, Coloring);

struct Source {
    name: String,
    results: Vec<Checked>,
}

fn source<F>(name: impl Into<String>, count: usize, f: F) -> Result<Source>
where
    F: Fn(usize) -> Result<Vec<Checked>> + Sync,
{
    let chunks: Vec<Vec<Checked>> = (0..count).into_par_iter().map(&f).collect::<Result<_>>()?;
    Ok(Source {
        name: name.into(),
        results: chunks.into_iter().flatten().collect(),
    })
}

fn rng_for(seed: u64, salt: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    rng.set_stream(index as u64);
    rng
}

/// Each cell blue with probability `p_blue`.
fn biased_coloring(rows: usize, cols: usize, p_blue: f64, rng: &mut ChaCha8Rng) -> Coloring {
    let blue = (0..rows)
        .map(|_| (0..cols).filter(|_| rng.gen_bool(p_blue)).fold(0u64, |acc, j| acc | 1 << j))
        .collect();
    Coloring::from_blue_rows(rows, cols, blue).expect("valid shape")
}

fn graph_of(c: &Coloring) -> BiGraph {
    c.view(Color::Blue).graph
}

fn coloring_of(g: &BiGraph) -> Coloring {
    Coloring::from_blue_rows(g.left_size(), g.right_size(), g.left_rows().to_vec()).expect("valid shape")
}

fn square_4x4(i: usize) -> Coloring {
    let blue = (0..4).map(|r| ((i >> (4 * r)) & 0xf) as u64).collect();
    Coloring::from_blue_rows(4, 4, blue).expect("valid shape")
}

/// Canonical 5x5 colorings under row and column permutations.
fn canonical_5x5() -> &'static [Coloring] {
    static REPS: OnceLock<Vec<Coloring>> = OnceLock::new();
    REPS.get_or_init(|| canonical_representatives(5, 5, SymmetryFlags::NONE).expect("5x5 is supported"))
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let sources = match suite {
        Suite::Component => component_sources(cfg)?,
        Suite::Biclique => threshold_sources(cfg, check_no_biclique)?,
        Suite::Longest => threshold_sources(cfg, check_longest_cycle_bound)?,
        Suite::Rotation => rotation_sources(cfg)?,
        Suite::Edges => edge_sources(cfg)?,
        Suite::Pancyclic => pancyclic_sources(cfg)?,
    };
    let mut report = SuiteReport {
        suite,
        instances: 0,
        precondition_met: 0,
        violations: 0,
        sources: Vec::new(),
        examples: Vec::new(),
        reproducers: Vec::new(),
    };
    for s in sources {
        let mut sum = SourceSummary {
            name: s.name.clone(),
            instances: s.results.len() as u64,
            precondition_met: 0,
            violations: 0,
        };
        for (k, (check, object)) in s.results.iter().enumerate() {
            sum.precondition_met += check.precondition_met as u64;
            if check.is_violation() {
                sum.violations += 1;
                if report.examples.len() < EXAMPLES_KEPT {
                    report.examples.push(check.clone());
                }
                if let Some(dir) = &cfg.dump_dir {
                    std::fs::create_dir_all(dir)?;
                    let stem = format!("{}-{}-{k}", suite.name(), slug(&s.name));
                    std::fs::write(dir.join(format!("{stem}.col")), serialize_coloring(object))?;
                    let mut cert = check.to_certificate();
                    cert.witness_file = Some(format!("{stem}.col"));
                    cert.seed = Some(cfg.seed);
                    cert.write(&dir.join(format!("{stem}.json")))?;
                    report.reproducers.push(stem);
                }
            }
        }
        report.instances += sum.instances;
        report.precondition_met += sum.precondition_met;
        report.violations += sum.violations;
        report.sources.push(sum);
    }
    Ok(report)
}

fn slug(s: &str) -> String {
    s.chars()
        .map(|ch| if ch.is_ascii_alphanumeric() { ch } else { '-' })
        .collect::<String>()
        .split('-')
        .filter(|p| !p.is_empty())
        .collect::<Vec<_>>()
        .join("-")
}

fn component_sources(cfg: &SuiteConfig) -> Result<Vec<Source>> {
    let small = canonical_representatives(3, 3, SymmetryFlags::NONE)?;
    let mut out = vec![
        source("canonical 3x3, m=2,3", small.len(), |i| {
            [2, 3].iter().map(|&m| Ok((check_blue_component(&small[i], m)?, small[i].clone()))).collect()
        })?,
        source("exhaustive 4x4, m=2", 1 << 16, |i| {
            let c = square_4x4(i);
            Ok(vec![(check_blue_component(&c, 2)?, c)])
        })?,
    ];
    let reps = canonical_5x5();
    for m in [4, 5] {
        out.push(source(format!("canonical 5x5, m={m}"), reps.len(), |i| {
            let c = reps[i].clone();
            Ok(vec![(check_blue_component(&c, m)?, c)])
        })?);
    }
    let mut built = Vec::new();
    for n in 2..=8 {
        built.push((construct_balanced(n)?, n));
        for m in 2..n {
            built.push((construct_unbalanced(n, m)?, m));
        }
    }
    out.push(source("extremal constructions", built.len(), |i| {
        let (c, m) = &built[i];
        Ok(vec![(check_blue_component(c, *m)?, c.clone())])
    })?);
    for (side, m, p_blue) in [(6, 3, 0.7), (8, 4, 0.75)] {
        out.push(source(
            format!("seeded random {side}x{side}, m={m}, blue density {p_blue}"),
            cfg.random_instances,
            |i| {
                let c = biased_coloring(side, side, p_blue, &mut rng_for(cfg.seed, side as u64, i));
                Ok(vec![(check_blue_component(&c, m)?, c)])
            },
        )?);
    }
    Ok(out)
}

fn threshold_sources(cfg: &SuiteConfig, check: fn(&Coloring, usize, usize) -> Result<LemmaCheck>) -> Result<Vec<Source>> {
    let mut out = Vec::new();
    for (n, m) in [(5, 5), (6, 5)] {
        let side = extremal_shape(n, m)?;
        out.push(source(format!("seeded random {side}x{side}, n={n} m={m}"), cfg.random_instances, |i| {
            let c = biased_coloring(side, side, 0.5, &mut rng_for(cfg.seed, 100 + n as u64, i));
            Ok(vec![(check(&c, n, m)?, c)])
        })?);
        // the extremal coloring one size down, grown by a random row and column
        let base = if n == m { construct_balanced(m)? } else { construct_unbalanced(n, m)? };
        out.push(source(format!("grown construction {side}x{side}, n={n} m={m}"), cfg.random_instances, |i| {
            let mut rng = rng_for(cfg.seed, 200 + n as u64, i);
            let extra = biased_coloring(side, side, 0.5, &mut rng);
            let mut c = extra;
            for r in 0..side - 1 {
                for k in 0..side - 1 {
                    c.set(r, k, base.color(r, k));
                }
            }
            Ok(vec![(check(&c, n, m)?, c)])
        })?);
    }
    Ok(out)
}

fn rotation_sources(cfg: &SuiteConfig) -> Result<Vec<Source>> {
    const PER_GRAPH: usize = 4000;
    let check_graph = |g: &BiGraph| -> Result<Vec<Checked>> {
        let longest = longest_even_cycle(g);
        let Some(cycle) = longest.witnesses.get(&longest.longest) else {
            return Ok(Vec::new());
        };
        let object = coloring_of(g);
        rotation_attachments(g, cycle, PER_GRAPH)
            .iter()
            .map(|inst| Ok((check_rotation_exclusions(g, inst)?, object.clone())))
            .collect()
    };
    let mut out = Vec::new();
    for p in [0.25, 0.35] {
        out.push(source(format!("seeded random 7+7 graphs, density {p}"), cfg.random_instances, |i| {
            let g = graph_of(&biased_coloring(7, 7, p, &mut rng_for(cfg.seed, 300 + (p * 100.0) as u64, i)));
            check_graph(&g)
        })?);
    }
    out.push(source("canonical 5x5 graphs", canonical_5x5().len(), |i| {
        check_graph(&graph_of(&canonical_5x5()[i]))
    })?);
    Ok(out)
}

fn edge_sources(cfg: &SuiteConfig) -> Result<Vec<Source>> {
    let with_targets = |c: Coloring, targets: &[usize]| -> Result<Vec<Checked>> {
        let g = graph_of(&c);
        targets.iter().map(|&n| Ok((check_edge_bounds(&g, Some(n))?, c.clone()))).collect()
    };
    let reps = canonical_5x5();
    Ok(vec![
        source("exhaustive 4+4, n=2,3", 1 << 16, |i| with_targets(square_4x4(i), &[2, 3]))?,
        source("canonical 5+5, n=2,3,4", reps.len(), |i| with_targets(reps[i].clone(), &[2, 3, 4]))?,
        source("seeded random 8+5", cfg.random_instances, |i| {
            let c = biased_coloring(8, 5, 0.4, &mut rng_for(cfg.seed, 400, i));
            Ok(vec![(check_edge_bounds(&graph_of(&c), None)?, c)])
        })?,
        source("seeded random 7+7, n=3,4", cfg.random_instances, |i| {
            let c = biased_coloring(7, 7, 0.3, &mut rng_for(cfg.seed, 401, i));
            with_targets(c, &[3, 4])
        })?,
    ])
}

fn pancyclic_sources(cfg: &SuiteConfig) -> Result<Vec<Source>> {
    let reps = canonical_5x5();
    Ok(vec![
        source("exhaustive 4+4", 1 << 16, |i| {
            let c = square_4x4(i);
            Ok(vec![(check_pancyclicity(&graph_of(&c))?, c)])
        })?,
        source("canonical 5+5", reps.len(), |i| {
            Ok(vec![(check_pancyclicity(&graph_of(&reps[i]))?, reps[i].clone())])
        })?,
        source("seeded random 7+7, density 0.55", cfg.random_instances, |i| {
            let c = biased_coloring(7, 7, 0.55, &mut rng_for(cfg.seed, 500, i));
            Ok(vec![(check_pancyclicity(&graph_of(&c))?, c)])
        })?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("all".parse::<Suite>().is_err());
        assert_eq!(slug("seeded random 7+7, density 0.25"), "seeded-random-7-7-density-0-25");
    }

    #[test]
    fn exhaustive_square_indexing() {
        assert_eq!(square_4x4(0).blue_count(), 0);
        assert_eq!(square_4x4(0xffff).blue_count(), 16);
        assert_eq!(square_4x4(0x8001).pattern(), vec!["BRRR", "RRRR", "RRRR", "RRRB"]);
    }
}
