//! External SAT solvers behind a command template.
//!
//! The template is run with `sh -c` after substituting `{cnf}` (the
//! instance file) and `{model}` (where the solver must leave its answer).
//! The model file holds `UNSAT`, or `SAT` followed by the true literals,
//! with `s SATISFIABLE` / `v ... 0` lines from competition-style solvers
//! also understood.

use std::path::{Path, PathBuf};
use std::process::Command;

use serde::Deserialize;

use super::cnf::CnfDocument;
use crate::error::{Error, Result};

pub const SOLVER_ENV: &str = "BRAMSEY_SAT_CMD";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolverOutcome {
    Sat(Vec<i32>),
    Unsat,
}

/// Anything that can decide a [`CnfDocument`].
pub trait SatBackend {
    fn solve(&self, doc: &CnfDocument) -> Result<SolverOutcome>;

    fn describe(&self) -> String;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverCommand {
    pub template: String,
}

#[derive(Debug, Default, Deserialize)]
struct ConfigFile {
    solver_cmd: Option<String>,
}

impl SolverCommand {
    pub fn new(template: impl Into<String>) -> Result<SolverCommand> {
        let template = template.into();
        if !template.contains("{model}") {
            return Err(Error::Config(format!("solver template must mention {{model}}: {template:?}")));
        }
        Ok(SolverCommand { template })
    }

    /// First configured solver: the explicit flag, then `solver_cmd` in the
    /// TOML config file, then the `BRAMSEY_SAT_CMD` environment variable.
    pub fn resolve(flag: Option<&str>, config: Option<&Path>) -> Result<Option<SolverCommand>> {
        if let Some(t) = flag {
            return SolverCommand::new(t).map(Some);
        }
        if let Some(path) = config {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
            let cfg: ConfigFile =
                toml::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            if let Some(t) = cfg.solver_cmd {
                return SolverCommand::new(t).map(Some);
            }
        }
        match std::env::var(SOLVER_ENV) {
            Ok(t) if !t.trim().is_empty() => SolverCommand::new(t).map(Some),
            _ => Ok(None),
        }
    }

    fn command_line(&self, cnf: &Path, model: &Path) -> String {
        self.template
            .replace("{cnf}", &quote(cnf))
            .replace("{model}", &quote(model))
    }

    /// Run on a DIMACS file already on disk.
    pub fn solve_file(&self, cnf: &Path, model: &Path) -> Result<SolverOutcome> {
        let line = self.command_line(cnf, model);
        let status = Command::new("sh")
            .arg("-c")
            .arg(&line)
            .status()
            .map_err(|e| Error::Solver(format!("cannot start `{line}`: {e}")))?;
        let text = match std::fs::read_to_string(model) {
            Ok(t) => t,
            Err(_) => {
                return Err(Error::Solver(format!(
                    "no model file after `{line}` ({status})"
                )))
            }
        };
        parse_model(&text).map_err(|e| Error::Solver(format!("{e} ({status})")))
    }
}

impl SatBackend for SolverCommand {
    fn solve(&self, doc: &CnfDocument) -> Result<SolverOutcome> {
        let dir = tempfile::tempdir()?;
        let cnf: PathBuf = dir.path().join("instance.cnf");
        let model = dir.path().join("instance.model");
        std::fs::write(&cnf, doc.to_dimacs())?;
        self.solve_file(&cnf, &model)
    }

    fn describe(&self) -> String {
        self.template.clone()
    }
}

fn quote(p: &Path) -> String {
    format!("'{}'", p.display().to_string().replace('\'', r"'\''"))
}

/// Parse a model file. Empty or verdict-free files without literals are errors.
pub fn parse_model(text: &str) -> Result<SolverOutcome> {
    let mut verdict: Option<bool> = None;
    let mut lits = Vec::new();
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let body = line.strip_prefix("s ").unwrap_or(line).trim();
        match body {
            "UNSAT" | "UNSATISFIABLE" => {
                verdict = Some(false);
                continue;
            }
            "SAT" | "SATISFIABLE" => {
                verdict = Some(true);
                continue;
            }
            _ => {}
        }
        let body = line.strip_prefix("v ").unwrap_or(line);
        for tok in body.split_whitespace() {
            let lit: i32 = tok
                .parse()
                .map_err(|_| Error::Solver(format!("unreadable model token {tok:?}")))?;
            if lit != 0 {
                lits.push(lit);
            }
        }
    }
    match verdict {
        Some(false) => Ok(SolverOutcome::Unsat),
        Some(true) => Ok(SolverOutcome::Sat(lits)),
        None if !lits.is_empty() => Ok(SolverOutcome::Sat(lits)),
        None => Err(Error::Solver("empty model file".into())),
    }
}
