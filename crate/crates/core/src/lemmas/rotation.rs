//! Adjacencies ruled out around a longest cycle `C` with a path `P` outside
//! it. `P` runs from `x` to `y`, `u x` and `v y` are edges with `u, v` on
//! `C`, and `w+`, `w-` are the successor and predecessor of `w` along `C`.
//!
//! Two side conditions are needed for the exclusions to hold and are checked
//! here: `u != v`, and `P` has at least two vertices for the four items whose
//! longer cycle skips one vertex of `C`. Without them each of those items has
//! small counterexamples; the literal adjacency is still reported for every
//! item.

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{LemmaCheck, LemmaId};
use crate::bits;
use crate::certificate::WitnessRecord;
use crate::cycles::longest_even_cycle;
use crate::error::{Error, Result};
use crate::graph::{BiGraph, Side, Vertex};
use crate::witness::{validate_cycle_witness, CycleWitness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationInstance {
    pub cycle: CycleWitness,
    pub path: Vec<Vertex>,
    pub u: Vertex,
    pub v: Vertex,
}

/// One excluded adjacency.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Exclusion {
    #[serde(rename = "u- v-")]
    PredPred,
    #[serde(rename = "u+ v+")]
    SuccSucc,
    #[serde(rename = "u+ v++")]
    SuccSucc2,
    #[serde(rename = "u-- v-")]
    Pred2Pred,
    #[serde(rename = "u-- y")]
    Pred2End,
    #[serde(rename = "v++ x")]
    Succ2Start,
}

impl Exclusion {
    pub const ALL: [Exclusion; 6] = [
        Exclusion::PredPred,
        Exclusion::SuccSucc,
        Exclusion::SuccSucc2,
        Exclusion::Pred2Pred,
        Exclusion::Pred2End,
        Exclusion::Succ2Start,
    ];

    /// Whether the longer cycle behind this item drops a vertex of `C`.
    pub fn needs_long_path(self) -> bool {
        !matches!(self, Exclusion::PredPred | Exclusion::SuccSucc)
    }

    fn pair(self, inst: &RotationInstance, pu: usize, pv: usize) -> (Vertex, Vertex) {
        let c = &inst.cycle;
        let x = inst.path[0];
        let y = *inst.path.last().expect("nonempty path");
        match self {
            Exclusion::PredPred => (c.at(pu, -1), c.at(pv, -1)),
            Exclusion::SuccSucc => (c.at(pu, 1), c.at(pv, 1)),
            Exclusion::SuccSucc2 => (c.at(pu, 1), c.at(pv, 2)),
            Exclusion::Pred2Pred => (c.at(pu, -2), c.at(pv, -1)),
            Exclusion::Pred2End => (c.at(pu, -2), y),
            Exclusion::Succ2Start => (c.at(pv, 2), x),
        }
    }
}

fn validate(g: &BiGraph, inst: &RotationInstance) -> Result<(usize, usize)> {
    let pre = |msg: String| Err(Error::Precondition(msg));
    validate_cycle_witness(g, &inst.cycle).map_err(|v| Error::Precondition(format!("C: {v}")))?;
    let longest = longest_even_cycle(g).longest;
    if inst.cycle.len() != longest {
        return pre(format!("C has length {} but the longest cycle has length {longest}", inst.cycle.len()));
    }
    if inst.path.is_empty() {
        return pre("P is empty".into());
    }
    let (cl, cr) = inst.cycle.vertex_sets();
    let mut seen = (0u64, 0u64);
    for (k, &p) in inst.path.iter().enumerate() {
        if !g.contains(p) {
            return pre(format!("{p} is not a vertex"));
        }
        let (on_c, used) = match p.side {
            Side::Left => (bits::contains(cl, p.index), &mut seen.0),
            Side::Right => (bits::contains(cr, p.index), &mut seen.1),
        };
        if on_c {
            return pre(format!("{p} lies on C"));
        }
        if bits::contains(*used, p.index) {
            return pre(format!("{p} repeats on P"));
        }
        *used |= bits::bit(p.index);
        if k > 0 && !g.adjacent(inst.path[k - 1], p) {
            return pre(format!("{} {p} is not an edge of P", inst.path[k - 1]));
        }
    }
    let pu = inst.cycle.position(inst.u).ok_or_else(|| Error::Precondition(format!("u={} not on C", inst.u)))?;
    let pv = inst.cycle.position(inst.v).ok_or_else(|| Error::Precondition(format!("v={} not on C", inst.v)))?;
    let x = inst.path[0];
    let y = *inst.path.last().expect("nonempty");
    if !g.adjacent(inst.u, x) {
        return pre(format!("u x = {} {x} is not an edge", inst.u));
    }
    if !g.adjacent(inst.v, y) {
        return pre(format!("v y = {} {y} is not an edge", inst.v));
    }
    Ok((pu, pv))
}

/// Structural hypotheses failing give an error; `u = v` makes the check
/// vacuous. Otherwise every applicable exclusion is tested.
pub fn check_rotation_exclusions(g: &BiGraph, inst: &RotationInstance) -> Result<LemmaCheck> {
    let (pu, pv) = validate(g, inst)?;
    let mut r = LemmaCheck::new(
        LemmaId::RotationExclusions,
        format!("|C|={} |P|={} u={} v={}", inst.cycle.len(), inst.path.len(), inst.u, inst.v),
    );
    r.witnesses.push(WitnessRecord::cycle(None, &inst.cycle));
    let long_path = inst.path.len() >= 2;
    let items: Vec<_> = Exclusion::ALL
        .iter()
        .map(|&e| {
            let (a, b) = e.pair(inst, pu, pv);
            let adjacent = g.adjacent(a, b);
            let applicable = inst.u != inst.v && (long_path || !e.needs_long_path());
            (e, a, b, adjacent, applicable)
        })
        .collect();
    r.details = json!({
        "path": inst.path,
        "items": items.iter().map(|(e, a, b, adjacent, applicable)| json!({
            "item": e,
            "pair": [a, b],
            "adjacent": adjacent,
            "applicable": applicable,
        })).collect::<Vec<_>>(),
    });
    if inst.u == inst.v {
        return Ok(r.vacuous("u = v"));
    }
    r.precondition_met = true;
    let broken: Vec<String> = items
        .iter()
        .filter(|it| it.3 && it.4)
        .map(|(e, a, b, ..)| format!("{} present as {a}{b}", serde_json::to_value(e).unwrap().as_str().unwrap()))
        .collect();
    r.conclusion_held = broken.is_empty();
    r.notes.extend(broken);
    if !long_path {
        r.notes.push("|P| = 1: only the u- v- and u+ v+ items apply".into());
    }
    Ok(r)
}

/// Every instance on `cycle` (in both orientations): each path outside the
/// cycle, in both directions, with each pair `u != v` of attachment points.
/// Stops after `limit` instances.
pub fn rotation_attachments(g: &BiGraph, cycle: &CycleWitness, limit: usize) -> Vec<RotationInstance> {
    let (cl, cr) = cycle.vertex_sets();
    let free_l = bits::full(g.left_size()) & !cl;
    let free_r = bits::full(g.right_size()) & !cr;
    let mut paths = Vec::new();
    let starts = bits::members(free_l)
        .map(Vertex::left)
        .chain(bits::members(free_r).map(Vertex::right));
    for s in starts {
        let mut path = vec![s];
        extend_paths(g, free_l, free_r, &mut path, &mut paths);
    }
    let mut reversed = cycle.vertices.clone();
    reversed.reverse();
    let orientations = [cycle.clone(), CycleWitness::new(reversed)];
    let mut out = Vec::new();
    for c in &orientations {
        for p in &paths {
            let x = p[0];
            let y = *p.last().expect("nonempty");
            for &u in c.vertices.iter().filter(|&&u| g.adjacent(u, x)) {
                for &v in c.vertices.iter().filter(|&&v| v != u && g.adjacent(v, y)) {
                    if out.len() >= limit {
                        return out;
                    }
                    out.push(RotationInstance {
                        cycle: c.clone(),
                        path: p.clone(),
                        u,
                        v,
                    });
                }
            }
        }
    }
    out
}

fn extend_paths(g: &BiGraph, free_l: u64, free_r: u64, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
    out.push(path.clone());
    let last = *path.last().expect("nonempty");
    let used = |side: Side, i: usize| path.iter().any(|p| p.side == side && p.index == i);
    let next: Vec<Vertex> = match last.side {
        Side::Left => bits::members(g.left_row(last.index) & free_r)
            .filter(|&j| !used(Side::Right, j))
            .map(Vertex::right)
            .collect(),
        Side::Right => bits::members(g.right_row(last.index) & free_l)
            .filter(|&i| !used(Side::Left, i))
            .map(Vertex::left)
            .collect(),
    };
    for w in next {
        path.push(w);
        extend_paths(g, free_l, free_r, path, out);
        path.pop();
    }
}
