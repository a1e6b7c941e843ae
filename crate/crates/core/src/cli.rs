//! Command-line front end. Exit codes: 0 success, 1 domain failure, 2 usage or parse error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::cycle::CycleContext;
use crate::document::{CertificateDocument, InstanceDocument, ScanReportDocument};
use crate::error::Error;
use crate::oracle;
use crate::solver::{self, Instance};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const DEFAULT_MAX_S: usize = 7;
pub const DEFAULT_MAX_FAMILIES: u64 = 50_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "rainbow-cycle",
    version,
    about = "Rainbow independent sets in odd cycles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a rainbow independent set for an instance file.
    Solve { input: PathBuf },
    /// Check a certificate against an instance, ignoring its trace.
    Verify {
        instance: PathBuf,
        certificate: PathBuf,
    },
    /// Solve and verify every rotation-reduced family for one s.
    Exhaustive {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_S)]
        max_s: usize,
    },
    /// Brute-force every family of s independent s-sets in C_t.
    Conjecture {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_FAMILIES)]
        max_families: u64,
    },
    /// List the independent m-sets of C_t, one JSON array per line.
    Enumerate {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        m: usize,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{e}");
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Solve { input } => cmd_solve(&input, out),
        Command::Verify {
            instance,
            certificate,
        } => cmd_verify(&instance, &certificate, out),
        Command::Exhaustive { s, workers, max_s } => cmd_exhaustive(s, workers, max_s, out),
        Command::Conjecture {
            t,
            s,
            workers,
            max_families,
        } => cmd_conjecture(t, s, workers, max_families, out),
        Command::Enumerate { t, m } => cmd_enumerate(t, m, out),
    };
    match outcome {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "{}", failure.body);
            failure.code
        }
    }
}

/// A structured error destined for stderr.
struct Failure {
    code: i32,
    body: serde_json::Value,
}

impl Failure {
    fn parse(message: impl ToString) -> Self {
        Self {
            code: EXIT_USAGE,
            body: json!({ "error": "ParseError", "message": message.to_string() }),
        }
    }

    fn invalid(message: impl ToString) -> Self {
        Self {
            code: EXIT_USAGE,
            body: json!({ "error": "InvalidParameters", "message": message.to_string() }),
        }
    }

    fn io(e: std::io::Error) -> Self {
        Self {
            code: EXIT_FAILURE,
            body: json!({ "error": "Io", "message": e.to_string() }),
        }
    }

    /// Malformed vertex data counts as a parse error; everything else is a domain failure.
    fn from_instance_error(e: &Error) -> Self {
        let malformed = matches!(
            e.root(),
            Error::CycleTooSmall { .. }
                | Error::VertexOutOfRange { .. }
                | Error::DuplicateVertex { .. }
        );
        let (code, name) = if malformed {
            (EXIT_USAGE, "ParseError")
        } else {
            (EXIT_FAILURE, e.kind())
        };
        Self {
            code,
            body: json!({
                "error": name,
                "kind": e.kind(),
                "set": e.set_index().map(|i| i + 1),
                "message": e.to_string(),
            }),
        }
    }
}

type Outcome = Result<i32, Failure>;

fn emit(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    let line = serde_json::to_string(value).expect("documents serialize");
    writeln!(out, "{line}").map_err(Failure::io)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<Instance, Failure> {
    let doc: InstanceDocument = read_json(path)?;
    doc.to_instance()
        .map_err(|e| Failure::from_instance_error(&e))
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn cmd_solve(input: &Path, out: &mut dyn Write) -> Outcome {
    let inst = load_instance(input)?;
    let cert = solver::solve(&inst).map_err(|e| Failure::from_instance_error(&e))?;
    emit(out, &CertificateDocument::from(&cert))?;
    Ok(EXIT_OK)
}

fn cmd_verify(instance: &Path, certificate: &Path, out: &mut dyn Write) -> Outcome {
    let cert: CertificateDocument = read_json(certificate)?;
    let inst = load_instance(instance)?;
    let verdict = cert
        .pairs(&inst)
        .and_then(|pairs| solver::verify_assignment(&inst, &pairs));
    match verdict {
        Ok(()) => {
            emit(out, &json!({ "verified": true }))?;
            Ok(EXIT_OK)
        }
        Err(rejection) => {
            emit(
                out,
                &json!({
                    "verified": false,
                    "reason": rejection.code(),
                    "message": rejection.to_string(),
                }),
            )?;
            Ok(EXIT_FAILURE)
        }
    }
}

fn cmd_exhaustive(s: usize, workers: Option<usize>, max_s: usize, out: &mut dyn Write) -> Outcome {
    if s == 0 || s > max_s {
        return Err(Failure::invalid(format!(
            "s must lie in 1..={max_s}, got {s}"
        )));
    }
    let report = oracle::exhaustive_theorem_check(s, workers.unwrap_or_else(default_workers))
        .map_err(Failure::invalid)?;
    emit(out, &ScanReportDocument::from(&report))?;
    Ok(if report.is_clean() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

fn cmd_conjecture(
    t: usize,
    s: usize,
    workers: Option<usize>,
    max_families: u64,
    out: &mut dyn Write,
) -> Outcome {
    let families = oracle::conjecture_family_count(t, s).map_err(Failure::invalid)?;
    if families > max_families {
        return Err(Failure::invalid(format!(
            "{families} families exceed the limit of {max_families}"
        )));
    }
    let report = oracle::conjecture_scan(t, s, workers.unwrap_or_else(default_workers))
        .map_err(Failure::invalid)?;
    emit(out, &ScanReportDocument::from(&report))?;
    Ok(if report.is_clean() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

fn cmd_enumerate(t: usize, m: usize, out: &mut dyn Write) -> Outcome {
    let ctx = CycleContext::new(t).map_err(Failure::invalid)?;
    let sets = oracle::enumerate_independent_sets(ctx, m).map_err(Failure::invalid)?;
    for set in sets {
        emit(out, &set.labels())?;
    }
    Ok(EXIT_OK)
}
