//! Cycle and biclique primitives against brute force.

mod common;

use bramsey::cycles::{cycle_spectrum, find_biclique, find_cycle, find_cycles, has_cycle_of_length, longest_even_cycle};
use bramsey::graph::BiGraph;
use bramsey::witness::{validate_biclique, validate_cycle_witness};
use common::{graph_from_index, has_biclique, is_cycle_in, random_graph};
use rayon::prelude::*;

fn agree(g: &BiGraph) -> Result<(), String> {
    let truth = common::spectrum(g);
    let spec = cycle_spectrum(g);
    if spec.lengths != truth {
        return Err(format!("spectrum {:?} vs oracle {:?}", spec.lengths, truth));
    }
    if longest_even_cycle(g).longest != truth.iter().max().copied().unwrap_or(0) {
        return Err("longest differs".into());
    }
    for w in spec.witnesses.values() {
        if !is_cycle_in(g, w) || validate_cycle_witness(g, w).is_err() {
            return Err(format!("bad spectrum witness {w:?}"));
        }
    }
    let max_len = 2 * g.left_size().min(g.right_size());
    for len in (4..=max_len).step_by(2) {
        let found = find_cycle(g, len);
        if found.is_some() != truth.contains(&len) {
            return Err(format!("find_cycle({len}) disagrees"));
        }
        if let Some(w) = found {
            if w.len() != len || !is_cycle_in(g, &w) {
                return Err(format!("bad witness for {len}"));
            }
        }
    }
    for s in 1..=g.left_size() {
        for t in 1..=g.right_size() {
            let found = find_biclique(g, s, t).map_err(|e| e.to_string())?;
            if found.is_some() != has_biclique(g, s, t) {
                return Err(format!("find_biclique({s},{t}) disagrees"));
            }
            if let Some(w) = found {
                validate_biclique(g, &w).map_err(|e| e.to_string())?;
                if w.left.len() != s || w.right.len() != t {
                    return Err("biclique has the wrong size".into());
                }
            }
        }
    }
    Ok(())
}

#[test]
fn all_graphs_with_sides_four() {
    let bad: Vec<(u64, String)> = (0u64..1 << 16)
        .into_par_iter()
        .filter_map(|idx| agree(&graph_from_index(4, 4, idx)).err().map(|e| (idx, e)))
        .collect();
    assert!(bad.is_empty(), "{} disagreements, first {:?}", bad.len(), bad.first());
}

#[test]
fn seeded_random_six_plus_six() {
    let bad: Vec<(u64, String)> = (0u64..1000)
        .into_par_iter()
        .filter_map(|seed| agree(&random_graph(6, 6, seed)).err().map(|e| (seed, e)))
        .collect();
    assert!(bad.is_empty(), "{} disagreements, first {:?}", bad.len(), bad.first());
}

#[test]
fn unbalanced_sides() {
    for seed in 0..300 {
        let g = random_graph(7, 4, seed);
        agree(&g).unwrap();
        agree(&g.transpose()).unwrap();
    }
}

#[test]
fn odd_and_short_lengths_are_rejected() {
    let g = BiGraph::complete(3, 3).unwrap();
    assert!(has_cycle_of_length(&g, 5).is_err());
    assert!(has_cycle_of_length(&g, 2).is_err());
    assert!(has_cycle_of_length(&g, 8).is_err());
}

#[test]
fn complete_graphs_have_every_short_length() {
    for a in 2..=5 {
        for b in 2..=5 {
            let g = BiGraph::complete(a, b).unwrap();
            for len in (4..=2 * a.min(b)).step_by(2) {
                let w = has_cycle_of_length(&g, len).unwrap().expect("present");
                assert!(is_cycle_in(&g, &w));
            }
        }
    }
}

#[test]
fn distinct_cycles_are_distinct() {
    // K_{3,3} has 9 four-cycles and 6 six-cycles
    let g = BiGraph::complete(3, 3).unwrap();
    assert_eq!(find_cycles(&g, 4, 100).len(), 9);
    assert_eq!(find_cycles(&g, 6, 100).len(), 6);
    assert_eq!(find_cycles(&g, 6, 4).len(), 4);
    for w in find_cycles(&g, 6, 100) {
        assert!(is_cycle_in(&g, &w));
    }
}
