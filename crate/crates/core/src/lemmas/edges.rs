//! Edge counts against a longest cycle `C` with `|C| = 2c`.
//!
//! Outside-cycle bound, sides `p >= q >= c` (`p` the larger side):
//! `e(G-C) + e(G-C, C) <= c(p-1-c) + q` when `q <= 2c`, and
//! `<= c(p+q+1-3c)` when `q >= 2c`. It needs `G` to have a cycle at all:
//! a forest has `c = 0` and the second bound reads `0`.
//!
//! Square `C_2n`-free bound, sides `M`: `e(G) <= (M^2-M+6)/2` when
//! `c >= M/2` and `c > n`; `e(G) <= (n-1)(2M-2n+3)` when `c <= n-1 <= M/2`,
//! with equality only if `G[V(C)]` is complete.

use serde_json::{json, Value};

use super::{LemmaCheck, LemmaId};
use crate::certificate::WitnessRecord;
use crate::cycles::{find_cycle, longest_even_cycle};
use crate::error::{Error, Result};
use crate::graph::BiGraph;
use crate::witness::{validate_cycle_witness, CycleWitness};

/// Both bounds, with a longest cycle found by search. `n` enables the
/// square bound.
pub fn check_edge_bounds(g: &BiGraph, n: Option<usize>) -> Result<LemmaCheck> {
    let longest = longest_even_cycle(g);
    let cycle = longest.witnesses.get(&longest.longest).cloned();
    check_edge_bounds_with(g, cycle.as_ref(), n)
}

/// As [`check_edge_bounds`] with the longest cycle supplied. The cycle is
/// validated and its length compared against the true longest.
pub fn check_edge_bounds_with(g: &BiGraph, cycle: Option<&CycleWitness>, n: Option<usize>) -> Result<LemmaCheck> {
    let longest = longest_even_cycle(g).longest;
    let len = match cycle {
        Some(w) => {
            validate_cycle_witness(g, w).map_err(|v| Error::Precondition(format!("C: {v}")))?;
            w.len()
        }
        None => 0,
    };
    if len != longest {
        return Err(Error::Precondition(format!("C has length {len}, the longest cycle has length {longest}")));
    }
    let c = len / 2;
    let e = g.edge_count();
    let mut r = LemmaCheck::new(
        LemmaId::EdgeBounds,
        format!("{}+{} graph, e={e}, c={c}{}", g.left_size(), g.right_size(), n.map_or(String::new(), |n| format!(", n={n}"))),
    );
    if let Some(w) = cycle {
        r.witnesses.push(WitnessRecord::cycle(None, w));
    }
    let mut checks: Vec<Value> = Vec::new();
    let mut all_held = true;

    let inside = match cycle {
        Some(w) => {
            let (l, rr) = w.vertex_sets();
            g.induced(l, rr).edge_count()
        }
        None => 0,
    };
    let outside = e - inside;
    let (p, q) = if g.left_size() >= g.right_size() {
        (g.left_size(), g.right_size())
    } else {
        (g.right_size(), g.left_size())
    };
    if c >= 2 {
        let (p, q, c) = (p as i64, q as i64, c as i64);
        if q <= 2 * c {
            let bound = c * (p - 1 - c) + q;
            let held = (outside as i64) <= bound;
            all_held &= held;
            checks.push(json!({"bound": "outside, q <= 2c", "lhs": outside, "rhs": bound, "held": held}));
        }
        if q >= 2 * c {
            let bound = c * (p + q + 1 - 3 * c);
            let held = (outside as i64) <= bound;
            all_held &= held;
            checks.push(json!({"bound": "outside, q >= 2c", "lhs": outside, "rhs": bound, "held": held}));
        }
    } else {
        r.notes.push("outside bound skipped: no cycle".into());
    }

    if let Some(n) = n {
        let m_side = g.left_size();
        if g.right_size() != m_side {
            r.notes.push("square bound skipped: sides differ".into());
        } else if n < 2 {
            r.notes.push("square bound skipped: n < 2".into());
        } else if let Some(w) = find_cycle(g, 2 * n) {
            r.witnesses.push(WitnessRecord::cycle(None, &w));
            r.notes.push(format!("square bound skipped: C_{} present", 2 * n));
        } else {
            let mm = m_side as i64;
            let (ci, ni, ei) = (c as i64, n as i64, e as i64);
            if 2 * ci >= mm && ci > ni {
                let rhs2 = mm * mm - mm + 6;
                let held = 2 * ei <= rhs2;
                all_held &= held;
                checks.push(json!({"bound": "square, c >= M/2 and c > n", "lhs": ei, "rhs": rhs2 as f64 / 2.0, "held": held}));
            }
            if ci < ni && 2 * (ni - 1) <= mm {
                let bound = (ni - 1) * (2 * mm - 2 * ni + 3);
                let held = ei <= bound;
                all_held &= held;
                let mut check = json!({"bound": "square, c <= n-1 <= M/2", "lhs": ei, "rhs": bound, "held": held});
                if ei == bound {
                    let complete = inside == c * c;
                    all_held &= complete;
                    check["equality"] = json!(true);
                    check["cycle_span_complete"] = json!(complete);
                }
                checks.push(check);
            }
        }
    }
    r.precondition_met = !checks.is_empty();
    r.conclusion_held = all_held;
    if !r.precondition_met {
        r.notes.push("no bound applies".into());
    }
    r.details = json!({ "e": e, "c": c, "inside": inside, "outside": outside, "checks": checks });
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k44_square_bound_is_vacuous() {
        let g = BiGraph::complete(4, 4).unwrap();
        let r = check_edge_bounds(&g, Some(3)).unwrap();
        assert!(r.notes.iter().any(|s| s.contains("C_6 present")));
        // the outside bound still applies: nothing lies outside a Hamiltonian cycle
        assert!(r.precondition_met && r.conclusion_held);
        assert_eq!(r.details["outside"], 0);
    }

    #[test]
    fn forest_breaks_outside_bound_without_guard() {
        let star = BiGraph::from_edges(1, 3, &[(0, 0), (0, 1), (0, 2)]).unwrap();
        let r = check_edge_bounds(&star, None).unwrap();
        assert!(!r.precondition_met);
    }

    #[test]
    fn short_cycle_rejected() {
        let g = BiGraph::complete(3, 3).unwrap();
        let w = CycleWitness::from_pairs(&[0, 1], &[0, 1]);
        assert!(check_edge_bounds_with(&g, Some(&w), None).is_err());
    }
}
