//! Seeded random sampling of colorings as a sanity check above exhaustive sizes.

use std::path::PathBuf;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use super::{known_value, Mode, Verdict, VerifyReport};
use crate::certificate::{CertKind, Certificate, WitnessRecord};
use crate::coloring::{serialize_coloring, Coloring};
use crate::constructions::avoids_targets;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct SampleOptions {
    pub trials: u64,
    pub seed: u64,
    /// Where colorings avoiding both targets are written.
    pub dump_dir: Option<PathBuf>,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions {
            trials: 10_000,
            seed: 0,
            dump_dir: None,
        }
    }
}

/// The coloring drawn for `trial`: ChaCha8 seeded with `seed`, one stream per trial.
pub fn sample_coloring(big_n: usize, seed: u64, trial: u64) -> Coloring {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    Coloring::random(big_n, big_n, &mut rng).expect("valid shape")
}

/// Fraction of random colorings of `K_{N,N}` holding a blue `C_2n` or a red
/// `C_2m`. Evidence only: the verdict is always `inconclusive`. A miss when
/// `N` is at least the known value is flagged in `details.falsifying`.
pub fn random_sample_upper(n: usize, m: usize, big_n: usize, opts: &SampleOptions) -> Result<VerifyReport> {
    if n < 2 || m < 2 || big_n == 0 || big_n > 64 {
        return Err(Error::Parameters(format!("need n, m >= 2 and 1 <= N <= 64, got n={n} m={m} N={big_n}")));
    }
    if opts.trials == 0 {
        return Err(Error::Parameters("trials must be positive".into()));
    }
    let start = Instant::now();
    let misses: Vec<u64> = (0..opts.trials)
        .into_par_iter()
        .filter(|&t| avoids_targets(&sample_coloring(big_n, opts.seed, t), n, m))
        .collect();
    if let Some(dir) = &opts.dump_dir {
        if !misses.is_empty() {
            std::fs::create_dir_all(dir)?;
        }
        for &t in &misses {
            let c = sample_coloring(big_n, opts.seed, t);
            std::fs::write(dir.join(format!("miss-{t}.col")), serialize_coloring(&c))?;
            let mut cert = Certificate::new(CertKind::LowerWitness, "sampling-miss").with_params(Some(n), Some(m), Some(big_n));
            cert.witnesses.push(WitnessRecord::coloring(&c));
            cert.seed = Some(opts.seed);
            cert.details = json!({ "trial": t });
            cert.write(&dir.join(format!("miss-{t}.json")))?;
        }
    }
    let hits = opts.trials - misses.len() as u64;
    let known = known_value(n, m);
    let falsifying = !misses.is_empty() && known.is_some_and(|k| big_n >= k);
    let mut report = VerifyReport::new(Mode::RandomSample, n, m, big_n, Verdict::Inconclusive);
    report.canonical_classes = opts.trials;
    report.seed = Some(opts.seed);
    report.counters.insert("trials".into(), opts.trials);
    report.counters.insert("hits".into(), hits);
    report.counters.insert("misses".into(), misses.len() as u64);
    report.witness = misses.first().map(|&t| sample_coloring(big_n, opts.seed, t));
    report.details = json!({
        "fraction": hits as f64 / opts.trials as f64,
        "miss_trials": misses,
        "known_value": known,
        "falsifying": falsifying,
    });
    report.wall_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}
