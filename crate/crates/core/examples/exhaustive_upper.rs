//! Exhaustive check that every coloring of `K_{N,N}` has a blue `C_2n` or a red `C_2m`.
//!
//! ```text
//! cargo run --release --example exhaustive_upper -- 3 2 5
//! ```

use bramsey::verify::{exhaustive_upper, ExhaustiveOptions, Verdict};

fn main() -> bramsey::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let runs: Vec<(usize, usize, usize)> = match args[..] {
        [n, m, big_n] => vec![(n, m, big_n)],
        _ => vec![(2, 2, 4), (2, 2, 5), (3, 2, 5), (4, 2, 5)],
    };
    for (n, m, big_n) in runs {
        let r = exhaustive_upper(n, m, big_n, &ExhaustiveOptions::default())?;
        println!(
            "(n,m,N)=({n},{m},{big_n}) {:<13} avoiding classes={:<4} nodes={:<8} {} ms",
            r.verdict.to_string(),
            r.canonical_classes,
            r.counters["nodes"],
            r.wall_ms
        );
        if r.verdict == Verdict::WitnessFound {
            for row in r.witness.expect("witness").pattern() {
                println!("    {row}");
            }
        }
    }
    Ok(())
}
