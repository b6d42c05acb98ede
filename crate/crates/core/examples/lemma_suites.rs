//! Run every lemma suite and print per-source counts.
//!
//! ```text
//! cargo run --release --example lemma_suites -- [random-instances]
//! ```

use bramsey::lemmas::{run_suite, Suite, SuiteConfig};

fn main() -> bramsey::Result<()> {
    let mut cfg = SuiteConfig::default();
    if let Some(k) = std::env::args().nth(1).and_then(|a| a.parse().ok()) {
        cfg.random_instances = k;
    }
    for suite in Suite::ALL {
        let start = std::time::Instant::now();
        let r = run_suite(suite, &cfg)?;
        println!(
            "{:<10} {:<8} instances={:<7} met={:<7} violations={} ({:.1?})",
            suite.name(),
            r.status(),
            r.instances,
            r.precondition_met,
            r.violations,
            start.elapsed()
        );
        for s in &r.sources {
            println!("    {:<48} {:>7} {:>7} {:>3}", s.name, s.instances, s.precondition_met, s.violations);
        }
        for v in &r.examples {
            println!("    violation: {} {:?}", v.instance, v.notes);
        }
    }
    Ok(())
}
