use serde_json::json;

use super::{LemmaCheck, LemmaId};
use crate::certificate::WitnessRecord;
use crate::cycles::{cycle_spectrum, find_cycle};
use crate::error::Result;
use crate::graph::BiGraph;

/// A Hamiltonian `a+a` graph with `a > 3` and more than `a(a-1)/2 + 2`
/// edges has cycles of every even length `4..=2a`.
pub fn check_pancyclicity(g: &BiGraph) -> Result<LemmaCheck> {
    let a = g.left_size();
    let e = g.edge_count();
    let mut r = LemmaCheck::new(LemmaId::Pancyclicity, format!("{}+{} graph, e={e}", a, g.right_size()));
    if g.right_size() != a {
        return Ok(r.vacuous("sides differ"));
    }
    if a <= 3 {
        return Ok(r.vacuous(format!("side size {a} <= 3")));
    }
    let threshold = a * (a - 1) / 2 + 2;
    // a(a-1)/2 is an integer, so the strict bound is exact
    if e <= threshold {
        return Ok(r.vacuous(format!("e = {e} <= {threshold}")));
    }
    let Some(ham) = find_cycle(g, 2 * a) else {
        return Ok(r.vacuous("not Hamiltonian"));
    };
    r.witnesses.push(WitnessRecord::cycle(None, &ham));
    r.precondition_met = true;
    let spec = cycle_spectrum(g);
    let missing: Vec<usize> = (4..=2 * a).step_by(2).filter(|l| !spec.lengths.contains(l)).collect();
    r.conclusion_held = missing.is_empty();
    for w in spec.witnesses.values() {
        r.witnesses.push(WitnessRecord::cycle(None, w));
    }
    r.details = json!({ "spectrum": spec.lengths, "missing": missing });
    Ok(r)
}
