//! The `bramsey` command line.
//!
//! Exit status: 0 when the run completed (and matched `--expect` if given),
//! 2 when a falsification, lemma violation or expectation mismatch was
//! found, 1 on usage or configuration errors. Every run that gets past
//! argument checking writes one certificate.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::certificate::{CertKind, Certificate, Stats, WitnessRecord};
use crate::coloring::{parse_coloring, serialize_coloring, Color};
use crate::constructions::{certify_extremal, ExtremalFamily, FamilyKind};
use crate::cycles::cycle_spectrum;
use crate::error::{Error, Result};
use crate::lemmas::{run_suite, Suite, SuiteConfig};
use crate::verify::{
    cegar_verify, exhaustive_upper, export_cnf, random_sample_upper, search_lower, BlockedCycle, CegarOptions,
    ExhaustiveOptions, LowerOptions, SampleOptions, SolverCommand, Verdict, VerifyReport, DEFAULT_GATE,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FALSIFIED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "bramsey", version, about = "Bipartite Ramsey numbers of even cycles")]
pub struct Cli {
    /// Where to write the certificate
    #[arg(long, global = true, value_name = "FILE", default_value = "bramsey-cert.json")]
    pub cert: PathBuf,

    /// Worker threads (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    pub workers: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write one of the extremal colorings
    Construct {
        /// unbalanced needs n > m, balanced needs n = m
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Blue target is C_2n
        #[arg(long)]
        n: usize,
        /// Red target is C_2m
        #[arg(long)]
        m: usize,
        /// Output coloring file
        #[arg(short = 'o', long = "output", value_name = "FILE")]
        output: PathBuf,
    },
    /// Certify that a coloring has no blue C_2n and no red C_2m
    Check {
        #[arg(long, value_name = "FILE")]
        coloring: PathBuf,
        /// Blue target is C_2n
        #[arg(long)]
        n: usize,
        /// Red target is C_2m
        #[arg(long)]
        m: usize,
        /// Expected verdict
        #[arg(long, value_enum)]
        expect: Option<ExtremalArg>,
    },
    /// Even cycle lengths realized in one color
    Spectrum {
        /// Coloring file
        #[arg(long, value_name = "FILE")]
        coloring: PathBuf,
        #[arg(long, value_enum)]
        color: ColorArg,
    },
    /// Decide or probe br(C_2n, C_2m) against N
    Verify(VerifyArgs),
    /// Run lemma suites
    Lemmas {
        /// component, biclique, longest, rotation, edges, pancyclic or all
        #[arg(long, value_parser = parse_suite)]
        suite: SuiteArg,
        /// Seed for the random instance sources
        #[arg(long, default_value_t = SuiteConfig::default().seed)]
        seed: u64,
        /// Instances per seeded random source
        #[arg(long, default_value_t = SuiteConfig::default().random_instances)]
        instances: usize,
        /// Directory for violation reproducers
        #[arg(long, value_name = "DIR")]
        dump_dir: Option<PathBuf>,
    },
    /// Write the avoidance CNF for K_{N,N}
    ExportCnf {
        /// Blue target is C_2n
        #[arg(long)]
        n: usize,
        /// Red target is C_2m
        #[arg(long)]
        m: usize,
        /// Side of K_{N,N}
        #[arg(long = "N", value_name = "N")]
        big_n: usize,
        /// JSON list of {"color", "cycle"} objects to block
        #[arg(long, value_name = "FILE")]
        blocked: Option<PathBuf>,
        /// Add row-order symmetry breaking
        #[arg(long)]
        symmetry_breaking: bool,
        #[arg(short = 'o', long = "output", value_name = "FILE")]
        output: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Verification method
    #[arg(long, value_enum)]
    pub mode: ModeArg,
    /// Blue target is C_2n
    #[arg(long)]
    pub n: usize,
    /// Red target is C_2m
    #[arg(long)]
    pub m: usize,
    /// Side of K_{N,N}
    #[arg(long = "N", value_name = "N")]
    pub big_n: usize,
    /// Expected verdict, e.g. verified or witness-found
    #[arg(long, value_parser = parse_verdict)]
    pub expect: Option<Verdict>,
    /// Exhaustive mode: largest N allowed
    #[arg(long, default_value_t = DEFAULT_GATE)]
    pub gate: usize,
    /// Exhaustive mode: checkpoint file, resumed if present
    #[arg(long, value_name = "FILE")]
    pub checkpoint: Option<PathBuf>,
    /// Lower mode: search node budget
    #[arg(long, default_value_t = LowerOptions::default().budget)]
    pub budget: u64,
    /// Sample mode: number of random colorings
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    /// Sample mode: generator seed
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Sample mode: directory for avoiding colorings
    #[arg(long, value_name = "DIR")]
    pub dump_dir: Option<PathBuf>,
    /// CEGAR mode: solver command template with {cnf} and {model}
    #[arg(long, value_name = "TEMPLATE")]
    pub solver_cmd: Option<String>,
    /// CEGAR mode: TOML file with a solver_cmd entry
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// CEGAR mode: cycles blocked per round
    #[arg(long, default_value_t = CegarOptions::default().batch)]
    pub batch: usize,
    /// CEGAR mode: leave out row-order symmetry breaking
    #[arg(long)]
    pub no_symmetry_breaking: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FamilyArg {
    Unbalanced,
    Balanced,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExtremalArg {
    Extremal,
    NotExtremal,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ColorArg {
    Red,
    Blue,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Lower,
    Cegar,
    Sample,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteArg {
    One(Suite),
    All,
}

fn parse_suite(s: &str) -> std::result::Result<SuiteArg, String> {
    if s == "all" {
        return Ok(SuiteArg::All);
    }
    s.parse().map(SuiteArg::One).map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
        format!("expected one of {}, all", names.join(", "))
    })
}

fn parse_verdict(s: &str) -> std::result::Result<Verdict, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parse `args` (program name first) and run. Returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.workers {
        Some(w) => match rayon::ThreadPoolBuilder::new().num_threads(w.max(1)).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(Error::Config(format!("cannot start {w} workers: {e}"))),
        },
        None => execute(&cli),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli) -> Result<i32> {
    let start = Instant::now();
    let (mut cert, code) = match &cli.command {
        Command::Construct { family, n, m, output } => construct(*family, *n, *m, output)?,
        Command::Check { coloring, n, m, expect } => check(coloring, *n, *m, *expect)?,
        Command::Spectrum { coloring, color } => spectrum(coloring, *color)?,
        Command::Verify(args) => verify(args)?,
        Command::Lemmas {
            suite,
            seed,
            instances,
            dump_dir,
        } => lemmas(*suite, *seed, *instances, dump_dir.clone())?,
        Command::ExportCnf {
            n,
            m,
            big_n,
            blocked,
            symmetry_breaking,
            output,
        } => export(*n, *m, *big_n, blocked.as_deref(), *symmetry_breaking, output)?,
    };
    let counters = std::mem::take(&mut cert.stats.counters);
    cert.stats = Stats::finished(start.elapsed(), counters);
    cert.write(&cli.cert)?;
    println!("certificate: {}", cli.cert.display());
    Ok(code)
}

fn read_coloring(path: &Path) -> Result<crate::coloring::Coloring> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    parse_coloring(&text)
}

fn construct(family: FamilyArg, n: usize, m: usize, output: &Path) -> Result<(Certificate, i32)> {
    let kind = match family {
        FamilyArg::Unbalanced => FamilyKind::Unbalanced,
        FamilyArg::Balanced => FamilyKind::Balanced,
    };
    let fam = ExtremalFamily::new(kind, n, m)?;
    let c = fam.coloring()?;
    std::fs::write(output, serialize_coloring(&c))?;
    let mut cert = certify_extremal(&c, n, m);
    cert.witness_file = Some(output.display().to_string());
    cert.details["family"] = json!(kind);
    println!("{kind} ({n},{m}): {}x{} coloring written to {}, {}", c.rows(), c.cols(), output.display(), cert.verdict);
    let code = if cert.verdict == "extremal" { EXIT_OK } else { EXIT_FALSIFIED };
    Ok((cert, code))
}

fn check(path: &Path, n: usize, m: usize, expect: Option<ExtremalArg>) -> Result<(Certificate, i32)> {
    if n < 2 || m < 2 {
        return Err(Error::Parameters(format!("need n, m >= 2, got n={n} m={m}")));
    }
    let c = read_coloring(path)?;
    let mut cert = certify_extremal(&c, n, m);
    cert.witness_file = Some(path.display().to_string());
    println!("{}: {}", path.display(), cert.verdict);
    let got = if cert.verdict == "extremal" { ExtremalArg::Extremal } else { ExtremalArg::NotExtremal };
    let code = match expect {
        Some(want) if want != got => EXIT_FALSIFIED,
        _ => EXIT_OK,
    };
    Ok((cert, code))
}

fn spectrum(path: &Path, color: ColorArg) -> Result<(Certificate, i32)> {
    let c = read_coloring(path)?;
    let color = match color {
        ColorArg::Red => Color::Red,
        ColorArg::Blue => Color::Blue,
    };
    let report = cycle_spectrum(&c.view(color));
    let lengths: Vec<String> = report.lengths.iter().map(|l| l.to_string()).collect();
    println!("{color} cycle lengths: {{{}}}, longest {}", lengths.join(", "), report.longest);
    let mut cert = Certificate::new(CertKind::Spectrum, "computed");
    cert.witness_file = Some(path.display().to_string());
    cert.witnesses = report.witnesses.values().map(|w| WitnessRecord::cycle(Some(color), w)).collect();
    cert.details = json!({ "color": color, "lengths": report.lengths, "longest": report.longest });
    Ok((cert, EXIT_OK))
}

fn verify(a: &VerifyArgs) -> Result<(Certificate, i32)> {
    let report: VerifyReport = match a.mode {
        ModeArg::Exhaustive => exhaustive_upper(
            a.n,
            a.m,
            a.big_n,
            &ExhaustiveOptions {
                gate: a.gate,
                checkpoint: a.checkpoint.clone(),
                max_shards: None,
            },
        )?,
        ModeArg::Lower => search_lower(
            a.n,
            a.m,
            a.big_n,
            &LowerOptions {
                budget: a.budget,
                ..LowerOptions::default()
            },
        )?,
        ModeArg::Cegar => {
            let solver = SolverCommand::resolve(a.solver_cmd.as_deref(), a.config.as_deref())?.ok_or_else(|| {
                Error::Config("cegar needs a solver: --solver-cmd, solver_cmd in --config, or BRAMSEY_SAT_CMD".into())
            })?;
            cegar_verify(
                a.n,
                a.m,
                a.big_n,
                &solver,
                &CegarOptions {
                    batch: a.batch.max(1),
                    symmetry_breaking: !a.no_symmetry_breaking,
                    ..CegarOptions::default()
                },
            )?
        }
        ModeArg::Sample => random_sample_upper(
            a.n,
            a.m,
            a.big_n,
            &SampleOptions {
                trials: a.trials,
                seed: a.seed,
                dump_dir: a.dump_dir.clone(),
            },
        )?,
    };
    let mut line = format!("{} (n,m,N)=({},{},{}): {}", report.mode, a.n, a.m, a.big_n, report.verdict);
    if a.mode == ModeArg::Sample {
        line.push_str(&format!(", fraction with a target cycle {}", report.details["fraction"]));
    }
    println!("{line}");
    let falsified = report.details.get("falsifying").and_then(|v| v.as_bool()).unwrap_or(false);
    let code = match a.expect {
        Some(want) if want != report.verdict => EXIT_FALSIFIED,
        _ if falsified => EXIT_FALSIFIED,
        _ => EXIT_OK,
    };
    let mut cert = report.to_certificate();
    if let Some(want) = a.expect {
        cert.details["expected"] = json!(want);
    }
    Ok((cert, code))
}

fn lemmas(which: SuiteArg, seed: u64, instances: usize, dump_dir: Option<PathBuf>) -> Result<(Certificate, i32)> {
    let cfg = SuiteConfig {
        seed,
        random_instances: instances,
        dump_dir,
    };
    let suites: Vec<Suite> = match which {
        SuiteArg::One(s) => vec![s],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let mut reports = Vec::new();
    for s in suites {
        let r = run_suite(s, &cfg)?;
        println!(
            "{:<10} {:<8} instances={} precondition-met={} violations={}",
            s.name(),
            r.status(),
            r.instances,
            r.precondition_met,
            r.violations
        );
        reports.push(r);
    }
    let violations: u64 = reports.iter().map(|r| r.violations).sum();
    let verdict = if violations > 0 {
        "violated"
    } else if reports.iter().any(|r| r.precondition_met == 0) {
        "vacuous"
    } else {
        "passed"
    };
    let mut cert = Certificate::new(CertKind::LemmaCheck, verdict);
    cert.seed = Some(seed);
    cert.details = json!({ "random_instances": instances, "suites": reports });
    let code = if violations > 0 { EXIT_FALSIFIED } else { EXIT_OK };
    Ok((cert, code))
}

fn export(
    n: usize,
    m: usize,
    big_n: usize,
    blocked: Option<&Path>,
    symmetry_breaking: bool,
    output: &Path,
) -> Result<(Certificate, i32)> {
    let cycles: Vec<BlockedCycle> = match blocked {
        Some(p) => serde_json::from_str(&std::fs::read_to_string(p)?)?,
        None => Vec::new(),
    };
    let doc = export_cnf(n, m, big_n, &cycles, symmetry_breaking)?;
    std::fs::write(output, doc.to_dimacs())?;
    println!(
        "{} variables, {} clauses written to {}",
        doc.num_vars,
        doc.clauses.len(),
        output.display()
    );
    let mut cert = Certificate::new(CertKind::CnfExport, "written").with_params(Some(n), Some(m), Some(big_n));
    cert.witness_file = Some(output.display().to_string());
    cert.details = json!({
        "variables": doc.num_vars,
        "clauses": doc.clauses.len(),
        "blocked_blue": doc.blocked_blue,
        "blocked_red": doc.blocked_red,
        "symmetry_breaking": symmetry_breaking,
    });
    Ok((cert, EXIT_OK))
}
