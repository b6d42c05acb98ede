//! Exhaustive upper-bound verification over canonical classes.
//!
//! Colorings of `K_{N,N}` are enumerated as nondecreasing tuples of
//! big-endian rows. A prefix that already holds a blue `C_2n` or a red
//! `C_2m` is cut, since both properties survive adding rows. Surviving full
//! tuples are reduced to their canonical class. Work is split into shards by
//! the first row, which run in parallel and can be checkpointed.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::json;

use super::{Mode, Verdict, VerifyReport};
use crate::canon::{from_big_endian_rows, is_canonical_rows, SymmetryFlags};
use crate::constructions::avoids_targets;
use crate::error::{Error, Result};

/// Largest `N` accepted unless the caller raises the gate.
pub const DEFAULT_GATE: usize = 5;

const CHECKPOINT_HEADER: &str = "bramsey-checkpoint v1";

#[derive(Clone, Debug)]
pub struct ExhaustiveOptions {
    pub gate: usize,
    /// File recording finished shards; existing entries are reused.
    pub checkpoint: Option<PathBuf>,
    /// Stop after this many new shards (the run is then inconclusive).
    pub max_shards: Option<usize>,
}

impl Default for ExhaustiveOptions {
    fn default() -> Self {
        ExhaustiveOptions {
            gate: DEFAULT_GATE,
            checkpoint: None,
            max_shards: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct ShardResult {
    nodes: u64,
    pruned: u64,
    classes: u64,
    first: Option<Vec<u64>>,
}

impl ShardResult {
    fn line(&self, shard: u64) -> String {
        let first = match &self.first {
            Some(rows) => rows.iter().map(|r| format!("{r:x}")).collect::<Vec<_>>().join(","),
            None => "-".into(),
        };
        format!(
            "shard {shard} nodes={} pruned={} classes={} first={first}",
            self.nodes, self.pruned, self.classes
        )
    }

    fn parse(line: &str) -> Option<(u64, ShardResult)> {
        let mut it = line.split_whitespace();
        if it.next()? != "shard" {
            return None;
        }
        let shard = it.next()?.parse().ok()?;
        let mut field = |name: &str| -> Option<String> { Some(it.next()?.strip_prefix(name)?.to_string()) };
        let nodes = field("nodes=")?.parse().ok()?;
        let pruned = field("pruned=")?.parse().ok()?;
        let classes = field("classes=")?.parse().ok()?;
        let first = match field("first=")?.as_str() {
            "-" => None,
            s => Some(
                s.split(',')
                    .map(|h| u64::from_str_radix(h, 16).ok())
                    .collect::<Option<Vec<u64>>>()?,
            ),
        };
        Some((
            shard,
            ShardResult {
                nodes,
                pruned,
                classes,
                first,
            },
        ))
    }
}

/// Decide whether every red/blue coloring of `K_{N,N}` contains a blue
/// `C_2n` or a red `C_2m`. The verdict is `verified` when no canonical
/// avoiding coloring exists and `witness-found` otherwise, with the first
/// avoiding representative in enumeration order as witness.
pub fn exhaustive_upper(n: usize, m: usize, big_n: usize, opts: &ExhaustiveOptions) -> Result<VerifyReport> {
    if n < 2 || m < 2 || big_n == 0 {
        return Err(Error::Parameters(format!("need n, m >= 2 and N >= 1, got n={n} m={m} N={big_n}")));
    }
    if big_n > opts.gate {
        return Err(Error::Feasibility { n: big_n, gate: opts.gate });
    }
    let start = Instant::now();
    let flags = SymmetryFlags::for_run(n, m);
    let shards = 1u64 << big_n;
    let mut done: BTreeMap<u64, ShardResult> = BTreeMap::new();
    let sink = match &opts.checkpoint {
        Some(path) => {
            done = load_checkpoint(path, n, m, big_n)?;
            let mut f = OpenOptions::new().create(true).append(true).open(path)?;
            if f.metadata()?.len() == 0 {
                writeln!(f, "{CHECKPOINT_HEADER} n={n} m={m} N={big_n}")?;
            }
            Some(Mutex::new(f))
        }
        None => None,
    };
    let pending: Vec<u64> = (0..shards)
        .filter(|s| !done.contains_key(s))
        .take(opts.max_shards.unwrap_or(usize::MAX))
        .collect();
    let fresh: Vec<(u64, ShardResult)> = pending
        .par_iter()
        .map(|&s| {
            let r = run_shard(n, m, big_n, flags, s);
            if let Some(sink) = &sink {
                let mut f = sink.lock().expect("checkpoint lock");
                writeln!(f, "{}", r.line(s))?;
                f.flush()?;
            }
            Ok((s, r))
        })
        .collect::<Result<_>>()?;
    done.extend(fresh);

    let complete = done.len() as u64 == shards;
    let mut counters = BTreeMap::new();
    let mut classes = 0;
    let mut first = None;
    for r in done.values() {
        *counters.entry("nodes".to_string()).or_insert(0) += r.nodes;
        *counters.entry("pruned".to_string()).or_insert(0) += r.pruned;
        classes += r.classes;
        if first.is_none() {
            first.clone_from(&r.first);
        }
    }
    counters.insert("shards_done".into(), done.len() as u64);
    let verdict = match (&first, complete) {
        (Some(_), _) => Verdict::WitnessFound,
        (None, true) => Verdict::Verified,
        (None, false) => Verdict::Inconclusive,
    };
    let mut report = VerifyReport::new(Mode::ExhaustiveUpper, n, m, big_n, verdict);
    report.canonical_classes = classes;
    report.witness = first.map(|rows| from_big_endian_rows(big_n, big_n, &rows).expect("valid rows"));
    report.counters = counters;
    report.symmetries = flags.names();
    report.details = json!({
        "gate": opts.gate,
        "shards": shards,
        "complete": complete,
        "avoiding_classes": classes,
    });
    report.wall_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn load_checkpoint(path: &Path, n: usize, m: usize, big_n: usize) -> Result<BTreeMap<u64, ShardResult>> {
    let mut done = BTreeMap::new();
    let f = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(done),
        Err(e) => return Err(e.into()),
    };
    let expected = format!("{CHECKPOINT_HEADER} n={n} m={m} N={big_n}");
    for (k, line) in BufReader::new(f).lines().enumerate() {
        let line = line?;
        if k == 0 {
            if line.trim() != expected {
                return Err(Error::Config(format!(
                    "checkpoint {} belongs to another run: {line:?}",
                    path.display()
                )));
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        // a torn last line from an interrupted write is ignored
        if let Some((s, r)) = ShardResult::parse(&line) {
            done.insert(s, r);
        }
    }
    Ok(done)
}

fn run_shard(n: usize, m: usize, big_n: usize, flags: SymmetryFlags, first_row: u64) -> ShardResult {
    let mut walk = Walk {
        n,
        m,
        big_n,
        flags,
        rows: vec![first_row],
        out: ShardResult::default(),
    };
    walk.descend();
    walk.out
}

struct Walk {
    n: usize,
    m: usize,
    big_n: usize,
    flags: SymmetryFlags,
    rows: Vec<u64>,
    out: ShardResult,
}

impl Walk {
    fn descend(&mut self) {
        self.out.nodes += 1;
        let k = self.rows.len();
        let prefix = from_big_endian_rows(k, self.big_n, &self.rows).expect("valid rows");
        if !avoids_targets(&prefix, self.n, self.m) {
            self.out.pruned += 1;
            return;
        }
        if k == self.big_n {
            if is_canonical_rows(&self.rows, k, k, self.flags) {
                self.out.classes += 1;
                if self.out.first.is_none() {
                    self.out.first = Some(self.rows.clone());
                }
            }
            return;
        }
        let last = self.rows[k - 1];
        for r in last..(1u64 << self.big_n) {
            self.rows.push(r);
            self.descend();
            self.rows.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checkpoint_lines_roundtrip() {
        let r = ShardResult {
            nodes: 10,
            pruned: 3,
            classes: 1,
            first: Some(vec![1, 0x1f, 2]),
        };
        assert_eq!(ShardResult::parse(&r.line(7)), Some((7, r)));
        let empty = ShardResult::default();
        assert_eq!(ShardResult::parse(&empty.line(0)), Some((0, empty)));
        assert_eq!(ShardResult::parse("shard 3 nodes=1 pru"), None);
    }

    #[test]
    fn gate() {
        let e = exhaustive_upper(2, 2, 6, &ExhaustiveOptions::default()).unwrap_err();
        assert!(matches!(e, Error::Feasibility { n: 6, gate: 5 }));
    }
}
