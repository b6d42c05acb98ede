//! Seeded random colorings at sizes beyond exhaustive reach.
//!
//! ```text
//! cargo run --release --example random_sampling -- 10000
//! ```

use bramsey::verify::{known_value, random_sample_upper, SampleOptions};

fn main() -> bramsey::Result<()> {
    let trials = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10_000);
    let opts = SampleOptions { trials, seed: 7, dump_dir: None };
    for (n, m, big_n) in [(2, 2, 4), (2, 2, 5), (3, 3, 6), (5, 5, 9), (5, 5, 10), (6, 5, 10)] {
        let r = random_sample_upper(n, m, big_n, &opts)?;
        println!(
            "(n,m,N)=({n},{m},{big_n}) known br={:<2} hit fraction {:<8} misses {}",
            known_value(n, m).unwrap_or(0),
            r.details["fraction"],
            r.counters["misses"]
        );
    }
    Ok(())
}
