//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! All tolerances are exact: verdicts must match, sampled fractions must equal
//! 1.0, oracle comparisons must agree on every instance. Criterion 9 is known
//! to fail (see KNOWN_FAILING); any other failure fails this target.

mod common;

use std::time::Instant;

use bramsey::constructions::{certify_extremal, construct_balanced, construct_unbalanced};
use bramsey::cycles::{
    cycle_spectrum, find_biclique, find_cycle, glue_complete_pairs, hamiltonian_by_degree, jackson_cycle,
    longest_even_cycle, Connector, GlueSpec,
};
use bramsey::graph::{BiGraph, Vertex};
use bramsey::lemmas::{run_suite, Suite, SuiteConfig};
use bramsey::verify::{
    cegar_verify, exhaustive_upper, random_sample_upper, search_lower, CegarOptions, ExhaustiveOptions, LowerOptions,
    SampleOptions, Verdict,
};
use common::{avoids, graph_from_index, has_biclique, is_cycle_in, random_graph};
use itertools::iproduct;
use rayon::prelude::*;

/// Criteria expected to fail, with the reason printed beside them.
const KNOWN_FAILING: &[(u32, &str)] = &[(
    9,
    "component has a genuine 3x3 counterexample at m=2; biclique and longest hypotheses are unsatisfiable unless the main theorem fails",
)];

enum Outcome {
    Pass(String),
    Fail(String),
    Skip(String),
}

fn verdict_of(ok: bool, detail: String) -> Outcome {
    if ok {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn small_value(n: usize, m: usize, value: usize) -> (bool, String) {
    let upper = exhaustive_upper(n, m, value, &ExhaustiveOptions::default()).unwrap();
    let lower = search_lower(n, m, value - 1, &LowerOptions::default()).unwrap();
    let witness_ok = lower.witness.as_ref().is_some_and(|w| avoids(w, n, m));
    let ok = upper.verdict == Verdict::Verified && lower.verdict == Verdict::WitnessFound && witness_ok;
    (ok, format!("br(C_{},C_{})={value}: N={value} {}, N={} {}", 2 * n, 2 * m, upper.verdict, value - 1, lower.verdict))
}

fn criterion_1() -> Outcome {
    let (ok, d) = small_value(2, 2, 5);
    verdict_of(ok, d)
}

fn criterion_2() -> Outcome {
    let (a, da) = small_value(3, 2, 5);
    let (b, db) = small_value(4, 2, 5);
    verdict_of(a && b, format!("{da}; {db}"))
}

fn criterion_3() -> Outcome {
    let Some(solver) = common::external_solver() else {
        return Outcome::Skip("no external solver; set BRAMSEY_SAT_CMD".into());
    };
    let opts = CegarOptions::default();
    let six = cegar_verify(3, 3, 6, &solver, &opts).unwrap();
    let five = cegar_verify(3, 3, 5, &solver, &opts).unwrap();
    let recert = five.witness.as_ref().is_some_and(|w| certify_extremal(w, 3, 3).verdict == "extremal" && avoids(w, 3, 3));
    verdict_of(
        six.verdict == Verdict::Unsat && five.verdict == Verdict::WitnessFound && recert,
        format!(
            "N=6 {} after {} rounds, N=5 {} (witness re-certified: {recert})",
            six.verdict, six.counters["rounds"], five.verdict
        ),
    )
}

fn criterion_4() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for (n, m) in iproduct!(5..=8usize, 5..=8usize).filter(|(n, m)| m < n) {
        let c = construct_unbalanced(n, m).unwrap();
        count += 1;
        if c.rows() != n + m - 2 || c.cols() != n + m - 2 || certify_extremal(&c, n, m).verdict != "extremal" {
            bad.push(format!("unbalanced({n},{m})"));
        }
    }
    for m in 5..=8 {
        let c = construct_balanced(m).unwrap();
        count += 1;
        if c.rows() != 2 * m - 1 || certify_extremal(&c, m, m).verdict != "extremal" {
            bad.push(format!("balanced({m})"));
        }
    }
    verdict_of(bad.is_empty(), format!("{count} constructions certified, failures {bad:?}"))
}

fn criterion_5() -> Outcome {
    let opts = SampleOptions { trials: 10_000, seed: 0, dump_dir: Some(std::env::temp_dir().join("bramsey-acceptance-misses")) };
    let mut ok = true;
    let mut parts = Vec::new();
    for (n, m) in [(5, 5), (6, 5)] {
        let r = random_sample_upper(n, m, 10, &opts).unwrap();
        let frac = r.details["fraction"].as_f64().unwrap();
        ok &= frac == 1.0 && r.counters["misses"] == 0 && r.counters["trials"] == 10_000;
        parts.push(format!("({n},{m},10) fraction {frac}"));
    }
    verdict_of(ok, format!("{} over 10^4 seeded trials each", parts.join(", ")))
}

fn primitives_agree(g: &BiGraph) -> bool {
    let truth = common::spectrum(g);
    let spec = cycle_spectrum(g);
    if spec.lengths != truth || longest_even_cycle(g).longest != truth.iter().max().copied().unwrap_or(0) {
        return false;
    }
    let cap = 2 * g.left_size().min(g.right_size());
    let cycles_ok = (4..=cap).step_by(2).all(|len| match find_cycle(g, len) {
        Some(w) => truth.contains(&len) && w.len() == len && is_cycle_in(g, &w),
        None => !truth.contains(&len),
    });
    cycles_ok
        && iproduct!(1..=g.left_size(), 1..=g.right_size())
            .all(|(s, t)| find_biclique(g, s, t).unwrap().is_some() == has_biclique(g, s, t))
}

fn criterion_6() -> Outcome {
    let exhaustive = (0u64..1 << 16).into_par_iter().filter(|&i| !primitives_agree(&graph_from_index(4, 4, i))).count();
    let random = (0u64..1000).into_par_iter().filter(|&s| !primitives_agree(&random_graph(6, 6, s))).count();
    verdict_of(
        exhaustive == 0 && random == 0,
        format!("disagreements: {exhaustive} of 65536 4+4 graphs, {random} of 1000 random 6+6 graphs"),
    )
}

fn criterion_7() -> Outcome {
    let moon_moser = |a: usize| -> (u64, u64) {
        (0u64..1 << (a * a))
            .into_par_iter()
            .filter_map(|idx| {
                let g = graph_from_index(a, a, idx);
                let hyp = (0..a).all(|i| {
                    (0..a).all(|j| g.has_edge(i, j) || g.degree(Vertex::left(i)) + g.degree(Vertex::right(j)) > a)
                });
                hyp.then(|| {
                    let ok = hamiltonian_by_degree(&g).is_ok_and(|w| w.len() == 2 * a && is_cycle_in(&g, &w));
                    (1, ok as u64)
                })
            })
            .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1))
    };
    let (c4, ok4) = moon_moser(4);
    let (c5, ok5) = moon_moser(5);
    let (mut cj, mut okj) = (0u64, 0u64);
    for idx in 0u64..1 << 15 {
        let g = graph_from_index(5, 3, idx);
        if (0..3).all(|j| g.degree(Vertex::right(j)) >= 4) {
            cj += 1;
            okj += jackson_cycle(&g).is_ok_and(|w| w.len() == 6 && is_cycle_in(&g, &w)) as u64;
        }
    }
    verdict_of(
        c4 == ok4 && c5 == ok5 && cj == okj && c4 > 0 && c5 > 0 && cj > 0,
        format!("Moon-Moser {ok4}/{c4} at side 4, {ok5}/{c5} at side 5; Jackson {okj}/{cj} on 5+3"),
    )
}

fn criterion_8() -> Outcome {
    let specs: Vec<GlueSpec> =
        iproduct!(1..=4usize, 1..=4usize, 1..=4usize, 1..=4usize, [Connector::CrossPair, Connector::TwoDisjoint])
            .map(|(a1, b1, a2, b2, connector)| GlueSpec { a1, b1, a2, b2, connector })
            .filter(|s| s.connector == Connector::CrossPair || (s.a1 >= 2 && s.a2 >= 2))
            .collect();
    let bad = specs
        .par_iter()
        .filter(|spec| {
            let g = spec.graph().unwrap();
            let truth = common::spectrum(&g);
            let r = glue_complete_pairs(spec).unwrap();
            let want = spec.guaranteed_lengths();
            let witnessed = want.iter().all(|l| r.guaranteed.witnesses.get(l).is_some_and(|w| is_cycle_in(&g, w)));
            !(witnessed && want.iter().all(|l| truth.contains(l)))
        })
        .count();
    verdict_of(bad == 0, format!("{} size tuples, {bad} with a missing or unsound guaranteed length", specs.len()))
}

fn criterion_9() -> Outcome {
    let cfg = SuiteConfig { dump_dir: Some(std::env::temp_dir().join("bramsey-acceptance-reproducers")), ..SuiteConfig::default() };
    let mut ok = true;
    let mut parts = Vec::new();
    for s in Suite::ALL {
        let r = run_suite(s, &cfg).unwrap();
        ok &= r.passed();
        parts.push(format!("{} {} ({} met, {} violations)", s.name(), r.status(), r.precondition_met, r.violations));
    }
    verdict_of(ok, parts.join("; "))
}

fn main() {
    let criteria: [(u32, fn() -> Outcome); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut unexpected = Vec::new();
    for (k, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        let known = KNOWN_FAILING.iter().find(|(c, _)| *c == k);
        match outcome {
            Outcome::Pass(d) => println!("PASS criterion {k}: {d} [{secs:.1}s]"),
            Outcome::Skip(d) => println!("SKIP criterion {k}: {d}"),
            Outcome::Fail(d) => {
                println!("FAIL criterion {k}: {d} [{secs:.1}s]");
                match known {
                    Some((_, why)) => println!("     known: {why}"),
                    None => unexpected.push(k),
                }
            }
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
