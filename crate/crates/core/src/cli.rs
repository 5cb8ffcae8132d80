//! The `nilrep` command line.
//!
//! Exit codes: 0 when everything passes, 1 for invalid algebras or failed
//! checks, 2 for usage errors (bad flags, unreadable paths, malformed
//! command-line rationals).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::bch::bch_product;
use crate::corpus::{self, CorpusSpec};
use crate::error::Error;
use crate::io::{AlgebraDoc, RepresentationDump};
use crate::lie::{LieAlgebra, LieElement};
use crate::rational::{format_rational, parse_rational_list};
use crate::rep::Representation;
use crate::verify::{self, render_table, report_json, ReportRow, VerifyOptions, DEFAULT_SAMPLES};

pub const MAX_DIM_VAR: &str = "NILREP_MAX_DIM";
pub const DEFAULT_MAX_DIM: usize = 8;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "nilrep",
    version,
    about = "Exact faithful representations of nilpotent Lie algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a file describes a nilpotent Lie algebra.
    Validate { path: PathBuf },
    /// Lower central series dimensions, nilpotency degree and center.
    Analyze { path: PathBuf },
    /// The group product x ∗ y.
    Bch {
        path: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Build F_G and dump the representation.
    Represent {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the property suite.
    Verify {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a standard algebra: abelian N, heisenberg D, strict_upper N,
    /// filiform N, free_nilpotent_2_3.
    Corpus {
        family: String,
        param: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One summary row per algebra file.
    Report {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the JSON rendering here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print JSON instead of the text table.
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Usage(String),
    Invalid(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e)
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn diagnostic(e: &Error) -> Value {
    json!({"valid": false, "error": e.kind(), "indices": e.indices(), "message": e.to_string()})
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("value serializes")
}

fn max_dim() -> std::result::Result<usize, Failure> {
    match std::env::var(MAX_DIM_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "{MAX_DIM_VAR} must be a positive integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> std::result::Result<LieAlgebra, Failure> {
    let doc = AlgebraDoc::parse(&read(path)?)?;
    let cap = max_dim()?;
    if doc.dim > cap {
        return Err(Error::DimensionCap { dim: doc.dim, cap }.into());
    }
    Ok(doc.to_algebra()?)
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => std::fs::write(p, format!("{text}\n"))
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display())))?,
        None => writeln!(out, "{text}").expect("stdout"),
    }
    Ok(EXIT_OK)
}

fn coords(x: &LieElement) -> Vec<String> {
    x.coords().iter().map(format_rational).collect()
}

fn element(g: &LieAlgebra, text: &str, flag: &str) -> std::result::Result<LieElement, Failure> {
    let v = parse_rational_list(text).map_err(|e| Failure::Usage(format!("--{flag}: {e}")))?;
    if v.len() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: v.len(),
        }
        .into());
    }
    Ok(LieElement::new(v))
}

fn execute(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Validate { path } => {
            let text = read(&path)?;
            let result = AlgebraDoc::parse(&text).and_then(|doc| {
                let cap = max_dim().unwrap_or(DEFAULT_MAX_DIM);
                if doc.dim > cap {
                    return Err(Error::DimensionCap { dim: doc.dim, cap });
                }
                doc.to_algebra()
            });
            match result {
                Ok(g) => {
                    let v = json!({"valid": true, "name": g.name(), "dim": g.dim(), "N": g.nilpotency()});
                    writeln!(out, "{}", pretty(&v)).expect("stdout");
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    writeln!(out, "{}", pretty(&diagnostic(&e))).expect("stdout");
                    Ok(EXIT_FAILURE)
                }
            }
        }
        Command::Analyze { path } => {
            let g = load(&path)?;
            let center = g.center();
            let v = json!({
                "name": g.name(),
                "dim": g.dim(),
                "lcs_dims": g.lcs_dims(),
                "N": g.nilpotency(),
                "center": center.basis().iter().map(|b| b.iter().map(format_rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            emit(out, None, &pretty(&v))
        }
        Command::Bch { path, x, y } => {
            let g = load(&path)?;
            let x = element(&g, &x, "x")?;
            let y = element(&g, &y, "y")?;
            let p = bch_product(&g, &x, &y)?;
            emit(
                out,
                None,
                &pretty(&json!({"x": coords(&x), "y": coords(&y), "product": coords(&p)})),
            )
        }
        Command::Represent { path, out: target } => {
            let g = load(&path)?;
            let rep = Representation::build(&g)?;
            emit(
                out,
                target.as_deref(),
                &RepresentationDump::from_representation(&rep).to_json(),
            )
        }
        Command::Verify {
            path,
            samples,
            seed,
            out: target,
        } => {
            if samples == 0 {
                return Err(Failure::Usage("--samples must be at least 1".into()));
            }
            let g = load(&path)?;
            let report = verify::verify(&g, VerifyOptions { samples, seed })?;
            emit(out, target.as_deref(), &report.to_json())?;
            Ok(if report.passed { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Corpus {
            family,
            param,
            out: target,
        } => {
            let spec = CorpusSpec::parse(&family, param)?;
            let g = corpus::make(&spec)?;
            emit(
                out,
                target.as_deref(),
                &AlgebraDoc::from_algebra(&g).to_json(),
            )
        }
        Command::Report {
            paths,
            samples,
            seed,
            out: target,
            json,
        } => {
            if samples == 0 {
                return Err(Failure::Usage("--samples must be at least 1".into()));
            }
            let mut rows = Vec::with_capacity(paths.len());
            for p in &paths {
                let g = load(p)?;
                let r = verify::verify(&g, VerifyOptions { samples, seed })?;
                rows.push(ReportRow::from(&r));
            }
            let doc = pretty(&report_json(&rows));
            if let Some(t) = target.as_deref() {
                emit(out, Some(t), &doc)?;
            }
            if json {
                writeln!(out, "{doc}").expect("stdout");
            } else {
                write!(out, "{}", render_table(&rows)).expect("stdout");
            }
            Ok(if rows.iter().all(|r| r.pass) {
                EXIT_OK
            } else {
                EXIT_FAILURE
            })
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                write!(err, "{text}").expect("stderr");
            } else {
                write!(out, "{text}").expect("stdout");
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            writeln!(
                err,
                "{}",
                pretty(&json!({"error": "UsageError", "message": msg}))
            )
            .expect("stderr");
            EXIT_USAGE
        }
        Err(Failure::Invalid(e)) => {
            writeln!(err, "{}", pretty(&diagnostic(&e))).expect("stderr");
            EXIT_FAILURE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("nilrep").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn corpus_to_stdout() {
        let (code, out, _) = call(&["corpus", "heisenberg", "3"]);
        assert_eq!(code, 0);
        let doc: AlgebraDoc = serde_json::from_str(&out).unwrap();
        assert_eq!(doc.dim, 3);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&["validate", "/nonexistent/file.json"]).0, EXIT_USAGE);
        assert_eq!(call(&["corpus", "heisenberg", "4"]).0, EXIT_FAILURE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }
}
