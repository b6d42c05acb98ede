use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{LemmaCheck, LemmaId};
use crate::bits;
use crate::certificate::WitnessRecord;
use crate::coloring::{Color, Coloring};
use crate::cycles::find_cycle;
use crate::error::{Error, Result};
use crate::graph::BiGraph;

/// Recorded with every component check.
pub const SINGLETON_CONVENTION: &str = "isolated vertices are not components";

/// Side sets of one connected component with at least one edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentWitness {
    pub a1: Vec<usize>,
    pub b1: Vec<usize>,
}

impl ComponentWitness {
    pub fn size(&self) -> usize {
        self.a1.len() + self.b1.len()
    }
}

/// Connected components of `g` that carry an edge, largest first
/// (ties by smallest left vertex).
pub fn blue_components(g: &BiGraph) -> Vec<ComponentWitness> {
    let mut seen_l = 0u64;
    let mut out = Vec::new();
    for s in 0..g.left_size() {
        if bits::contains(seen_l, s) || g.left_row(s) == 0 {
            continue;
        }
        let (mut cl, mut cr) = (bits::bit(s), 0u64);
        loop {
            let nr = bits::members(cl).fold(cr, |acc, i| acc | g.left_row(i));
            let nl = bits::members(nr).fold(cl, |acc, j| acc | g.right_row(j));
            if nl == cl && nr == cr {
                break;
            }
            cl = nl;
            cr = nr;
        }
        seen_l |= cl;
        out.push(ComponentWitness {
            a1: bits::members(cl).collect(),
            b1: bits::members(cr).collect(),
        });
    }
    out.sort_by(|a, b| b.size().cmp(&a.size()).then(a.a1.cmp(&b.a1)));
    out
}

/// Square coloring with side `>= m`: if there is no red `C_2m`, some blue
/// component has `|A1| + |B1| >= side`.
pub fn check_blue_component(c: &Coloring, m: usize) -> Result<LemmaCheck> {
    if !c.is_square() || c.rows() < m || m < 2 {
        return Err(Error::Shape(format!(
            "need a square coloring with side >= m >= 2, got {}x{} and m={m}",
            c.rows(),
            c.cols()
        )));
    }
    let side = c.rows();
    let mut r = LemmaCheck::new(LemmaId::BlueComponent, format!("{side}x{side} coloring, m={m}"));
    r.details = json!({ "convention": SINGLETON_CONVENTION, "m": m, "side": side });
    if let Some(w) = find_cycle(&c.view(Color::Red), 2 * m) {
        r.witnesses.push(WitnessRecord::cycle(Some(Color::Red), &w));
        return Ok(r.vacuous(format!("red C_{} present", 2 * m)));
    }
    r.precondition_met = true;
    let comps = blue_components(&c.view(Color::Blue));
    let best = comps.first().cloned();
    let best_size = best.as_ref().map_or(0, ComponentWitness::size);
    r.conclusion_held = best_size >= side;
    r.details["largest_component"] = json!(best);
    r.details["largest_size"] = json!(best_size);
    r.details["component_sizes"] = json!(comps.iter().map(ComponentWitness::size).collect::<Vec<_>>());
    r.notes.push(format!("largest blue component has {best_size} vertices, need {side}"));
    Ok(r)
}
