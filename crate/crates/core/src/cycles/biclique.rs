use crate::bits;
use crate::error::{Error, Result};
use crate::graph::BiGraph;
use crate::witness::BicliqueWitness;

/// A copy of `K_{s,t}` with `s` left and `t` right vertices, if present.
///
/// Branch and bound over left subsets in increasing order, carrying the common
/// right neighbourhood and cutting as soon as it drops below `t`.
pub fn find_biclique(g: &BiGraph, s: usize, t: usize) -> Result<Option<BicliqueWitness>> {
    if s > g.left_size() || t > g.right_size() {
        return Err(Error::Parameters(format!(
            "K_{{{s},{t}}} does not fit a {}x{} graph",
            g.left_size(),
            g.right_size()
        )));
    }
    let mut chosen = Vec::with_capacity(s);
    let found = grow(g, s, t, 0, bits::full(g.right_size()), &mut chosen);
    Ok(found.map(|common| BicliqueWitness {
        left: chosen,
        right: bits::members(common).take(t).collect(),
    }))
}

fn grow(g: &BiGraph, s: usize, t: usize, from: usize, common: u64, chosen: &mut Vec<usize>) -> Option<u64> {
    if chosen.len() == s {
        return Some(common);
    }
    let left = g.left_size();
    for i in from..left {
        if left - i < s - chosen.len() {
            break;
        }
        let next = common & g.left_row(i);
        if (next.count_ones() as usize) < t {
            continue;
        }
        chosen.push(i);
        if let Some(c) = grow(g, s, t, i + 1, next, chosen) {
            return Some(c);
        }
        chosen.pop();
    }
    None
}
