//! Small Ramsey values, re-derived by independent brute force.

mod common;

use std::collections::BTreeSet;

use bramsey::coloring::{Color, Coloring};
use bramsey::graph::Vertex;
use bramsey::verify::{
    cegar_verify, exhaustive_upper, export_cnf, random_sample_upper, search_lower, BlockedCycle, CegarOptions,
    ExhaustiveOptions, LowerOptions, Mode, SampleOptions, Verdict,
};
use bramsey::witness::CycleWitness;
use common::{avoids, Dpll};
use itertools::Itertools;
use rayon::prelude::*;

fn coloring(s: usize, idx: u64) -> Coloring {
    let rows = (0..s).map(|i| (idx >> (i * s)) & ((1 << s) - 1)).collect();
    Coloring::from_blue_rows(s, s, rows).unwrap()
}

/// Every avoiding coloring of `K_{s,s}`, by the cycle oracle.
fn avoiding(s: usize, n: usize, m: usize) -> Vec<Coloring> {
    (0u64..1 << (s * s)).into_par_iter().map(|i| coloring(s, i)).filter(|c| avoids(c, n, m)).collect()
}

/// Avoiding colorings of `K_{s+1,s+1}` grown from avoiding ones of `K_{s,s}`.
/// Complete, since the restriction of an avoiding coloring avoids.
fn grow(base: &[Coloring], n: usize, m: usize) -> Vec<Coloring> {
    let s = base.first().map_or(0, |c| c.rows());
    let extra = 2 * s + 1;
    base.par_iter()
        .flat_map_iter(|c| {
            (0u64..1 << extra).filter_map(move |bits| {
                let mut rows: Vec<u64> = c.blue_rows().to_vec();
                for (i, r) in rows.iter_mut().enumerate() {
                    *r |= (bits >> i & 1) << s;
                }
                rows.push(bits >> s);
                let g = Coloring::from_blue_rows(s + 1, s + 1, rows).unwrap();
                avoids(&g, n, m).then_some(g)
            })
        })
        .collect()
}

#[test]
fn c4_c4_is_five() {
    let four = avoiding(4, 2, 2);
    assert!(!four.is_empty());
    assert!(grow(&four, 2, 2).is_empty());
    let r = exhaustive_upper(2, 2, 5, &ExhaustiveOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Verified);
    let r = exhaustive_upper(2, 2, 4, &ExhaustiveOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::WitnessFound);
    assert!(avoids(r.witness.as_ref().unwrap(), 2, 2));
    let l = search_lower(2, 2, 4, &LowerOptions::default()).unwrap();
    assert_eq!(l.verdict, Verdict::WitnessFound);
    assert!(avoids(l.witness.as_ref().unwrap(), 2, 2));
}

#[test]
fn c6_c4_and_c8_c4_are_five() {
    for n in [3, 4] {
        let four = avoiding(4, n, 2);
        assert!(!four.is_empty(), "n={n}");
        assert!(grow(&four, n, 2).is_empty(), "n={n}");
        let r = exhaustive_upper(n, 2, 5, &ExhaustiveOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Verified, "n={n}");
        let l = search_lower(n, 2, 4, &LowerOptions::default()).unwrap();
        assert_eq!(l.verdict, Verdict::WitnessFound, "n={n}");
        assert!(avoids(l.witness.as_ref().unwrap(), n, 2));
    }
}

#[test]
fn class_count_matches_brute_force_orbits() {
    // orbits of avoiding 4x4 colorings for (3,2): rows, columns and transposition
    let all = avoiding(4, 3, 2);
    let perms: Vec<Vec<usize>> = (0..4).permutations(4).collect();
    let mut orbits = BTreeSet::new();
    for c in &all {
        let mut best = Vec::new();
        for img in [c.clone(), c.transpose()] {
            for rp in &perms {
                for cp in &perms {
                    let key: Vec<Color> = {
                        let p = img.permuted(rp, cp);
                        (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).map(|(i, j)| p.color(i, j)).collect()
                    };
                    if best.is_empty() || key < best {
                        best = key;
                    }
                }
            }
        }
        orbits.insert(best);
    }
    let r = exhaustive_upper(3, 2, 4, &ExhaustiveOptions::default()).unwrap();
    assert_eq!(r.canonical_classes as usize, orbits.len());
}

#[test]
fn lower_search_agrees_with_exhaustive() {
    let opts = LowerOptions { budget: 50_000_000, constructions: false };
    let r = search_lower(2, 2, 5, &opts).unwrap();
    assert_eq!(r.verdict, Verdict::ExhaustedNoWitness);
    let r = search_lower(3, 3, 5, &opts).unwrap();
    assert_eq!(r.verdict, Verdict::WitnessFound);
    assert!(avoids(r.witness.as_ref().unwrap(), 3, 3));
}

#[test]
fn lower_search_uses_constructions() {
    let r = search_lower(6, 5, 9, &LowerOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::WitnessFound);
    assert_eq!(r.details["source"], "unbalanced(6,5)");
    // the construction covers K_{N-1,N-1}; one size up is beyond it
    let r = search_lower(6, 5, 10, &LowerOptions { budget: 2_000, constructions: true }).unwrap();
    assert_eq!(r.verdict, Verdict::Inconclusive);
    assert_eq!(r.details["construction_side"], 9);
}

#[test]
fn checkpoint_resume_matches_fresh_run() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ck.txt");
    let fresh = exhaustive_upper(3, 2, 5, &ExhaustiveOptions::default()).unwrap();
    let partial = exhaustive_upper(
        3,
        2,
        5,
        &ExhaustiveOptions { checkpoint: Some(path.clone()), max_shards: Some(2), ..ExhaustiveOptions::default() },
    )
    .unwrap();
    assert_eq!(partial.verdict, Verdict::Inconclusive);
    let resumed = exhaustive_upper(
        3,
        2,
        5,
        &ExhaustiveOptions { checkpoint: Some(path.clone()), ..ExhaustiveOptions::default() },
    )
    .unwrap();
    assert_eq!(resumed.verdict, fresh.verdict);
    assert_eq!(resumed.counters["nodes"], fresh.counters["nodes"]);
    assert_eq!(resumed.body_json(), fresh.body_json());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("bramsey-checkpoint v1"));
}

#[test]
fn gate_is_enforced() {
    assert!(exhaustive_upper(2, 2, 6, &ExhaustiveOptions::default()).is_err());
}

#[test]
fn results_do_not_depend_on_worker_count() {
    let run = || exhaustive_upper(4, 2, 5, &ExhaustiveOptions::default()).unwrap().body_json();
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(run);
    let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap().install(run);
    assert_eq!(one, four);
}

/// Every `C_2k` of `K_{s,s}`, listed once per edge set.
fn all_cycles(s: usize, k: usize) -> Vec<CycleWitness> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for left in (0..s).permutations(k) {
        for right in (0..s).permutations(k) {
            let mut edges: Vec<(usize, usize)> = (0..k).flat_map(|t| [(left[t], right[t]), (left[(t + 1) % k], right[t])]).collect();
            edges.sort_unstable();
            if seen.insert(edges) {
                let mut v = Vec::new();
                for t in 0..k {
                    v.push(Vertex::left(left[t]));
                    v.push(Vertex::right(right[t]));
                }
                out.push(CycleWitness::new(v));
            }
        }
    }
    out
}

#[test]
fn full_cnf_models_are_avoiding_colorings() {
    for (n, m, s) in [(2, 2, 3), (2, 2, 4), (3, 2, 4)] {
        let mut blocked: Vec<BlockedCycle> = all_cycles(s, n).into_iter().map(|cycle| BlockedCycle { color: Color::Blue, cycle }).collect();
        blocked.extend(all_cycles(s, m).into_iter().map(|cycle| BlockedCycle { color: Color::Red, cycle }));
        let plain = export_cnf(n, m, s, &blocked, false).unwrap();
        let broken = export_cnf(n, m, s, &blocked, true).unwrap();
        let perms: Vec<Vec<usize>> = (0..s).permutations(s).collect();
        let ident: Vec<usize> = (0..s).collect();
        for idx in 0u64..1 << (s * s) {
            let c = coloring(s, idx);
            let ok = avoids(&c, n, m);
            assert_eq!(plain.satisfied_by(&c), ok, "({n},{m},{s}) {idx}");
            if broken.satisfied_by(&c) {
                assert!(ok);
            }
            if ok {
                assert!(perms.iter().any(|p| broken.satisfied_by(&c.permuted(p, &ident))));
            }
        }
        // a DPLL model decodes to an avoiding coloring
        let model = Dpll::solve_clauses(broken.num_vars, &broken.clauses).expect("satisfiable below br");
        assert!(avoids(&broken.decode(&model), n, m));
    }
}

#[test]
fn blocked_cycles_must_match_targets() {
    let c6 = all_cycles(3, 3).remove(0);
    assert!(export_cnf(2, 2, 3, &[BlockedCycle { color: Color::Blue, cycle: c6 }], false).is_err());
    let bad = CycleWitness::from_pairs(&[0, 0], &[0, 1]);
    assert!(export_cnf(2, 2, 3, &[BlockedCycle { color: Color::Red, cycle: bad }], false).is_err());
}

#[test]
fn cegar_with_reference_solver() {
    let opts = CegarOptions::default();
    for (n, m, big_n, want) in [
        (2, 2, 4, Verdict::WitnessFound),
        (2, 2, 5, Verdict::Unsat),
        (3, 2, 4, Verdict::WitnessFound),
        (3, 2, 5, Verdict::Unsat),
        (3, 3, 5, Verdict::WitnessFound),
    ] {
        let r = cegar_verify(n, m, big_n, &Dpll, &opts).unwrap();
        assert_eq!(r.mode, Mode::Cegar);
        assert_eq!(r.verdict, want, "({n},{m},{big_n})");
        if let Some(w) = &r.witness {
            assert!(avoids(w, n, m));
        }
    }
}

#[test]
fn sampling_is_reproducible_and_monotone() {
    let opts = SampleOptions { trials: 3000, seed: 11, dump_dir: None };
    let a = random_sample_upper(2, 2, 4, &opts).unwrap();
    let b = random_sample_upper(2, 2, 4, &opts).unwrap();
    assert_eq!(a.body_json(), b.body_json());
    assert!(a.counters["misses"] > 0);
    assert_eq!(a.details["falsifying"], false);
    // (2,2,5) is verified, so nothing avoids at 5 or 6
    for big_n in [5, 6] {
        let r = random_sample_upper(2, 2, big_n, &opts).unwrap();
        assert_eq!(r.counters["misses"], 0);
        assert_eq!(r.details["fraction"], 1.0);
    }
}

#[test]
fn sampling_dumps_misses() {
    let dir = tempfile::tempdir().unwrap();
    let opts = SampleOptions { trials: 200, seed: 3, dump_dir: Some(dir.path().to_path_buf()) };
    let r = random_sample_upper(2, 2, 3, &opts).unwrap();
    let misses = r.counters["misses"];
    assert!(misses > 0);
    let cols = std::fs::read_dir(dir.path()).unwrap().filter(|e| e.as_ref().unwrap().path().extension().is_some_and(|x| x == "col")).count();
    assert_eq!(cols as u64, misses);
}
