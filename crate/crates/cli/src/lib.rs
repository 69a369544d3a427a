//! Command-line front end: `solve`, `verify` and `batch`.
//!
//! Exit codes: 0 success, 1 no solution (`solve`), 2 input error,
//! 3 verification failure (`verify`).

pub mod batch;
pub mod error;
pub mod parts;
pub mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use mollweide::{verify, DEFAULT_TOLERANCE};

use crate::batch::InputFormat;
use crate::error::CliError;
use crate::parts::{Case, Parts};
use crate::report::{Outcome, OutputFormat, SolveReport, Summary, VerifyReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NO_SOLUTION: u8 = 1;
pub const EXIT_INPUT_ERROR: u8 = 2;
pub const EXIT_VERIFY_FAILED: u8 = 3;

/// Solve oblique triangles and check the answers with Mollweide's formulas.
#[derive(Debug, Parser)]
#[command(name = "mollweide", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a triangle from three given parts and verify every solution.
    Solve(SolveArgs),
    /// Check six user-supplied parts against every identity.
    Verify(VerifyArgs),
    /// Solve a file of records (CSV with header, or JSON lines).
    Batch(BatchArgs),
}

/// Triangle parts: angles in degrees, sides in any consistent unit.
#[derive(Debug, Args, Default)]
pub struct PartArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<f64>,
    #[arg(long = "a", allow_hyphen_values = true)]
    pub a: Option<f64>,
    #[arg(long = "b", allow_hyphen_values = true)]
    pub b: Option<f64>,
    #[arg(long = "c", allow_hyphen_values = true)]
    pub c: Option<f64>,
}

impl PartArgs {
    pub fn parts(&self) -> Parts {
        Parts {
            angles: [self.alpha, self.beta, self.gamma],
            sides: [self.a, self.b, self.c],
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, value_enum)]
    pub case: Case,
    #[command(flatten)]
    pub parts: PartArgs,
    /// Verification tolerance on the largest normalized residual.
    #[arg(long, default_value_t = DEFAULT_TOLERANCE, allow_hyphen_values = true)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "text")]
    pub output: OutputFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub parts: PartArgs,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE, allow_hyphen_values = true)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "text")]
    pub output: OutputFormat,
}

#[derive(Debug, Args)]
pub struct BatchArgs {
    /// Records file; `.csv` is read as a table, anything else as JSON lines.
    #[arg(long)]
    pub input: PathBuf,
    /// Default tolerance for records without their own `tol`.
    #[arg(long, default_value_t = DEFAULT_TOLERANCE, allow_hyphen_values = true)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "text")]
    pub output: OutputFormat,
}

/// Run a parsed command line, writing reports to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run(cli: &Cli, out: &mut impl Write, err: &mut impl Write) -> u8 {
    let result = match &cli.command {
        Command::Solve(args) => run_solve(args, out, err),
        Command::Verify(args) => run_verify(args, out, err),
        Command::Batch(args) => run_batch(args, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT_ERROR
        }
    }
}

pub fn run_solve(
    args: &SolveArgs,
    out: &mut impl Write,
    err: &mut impl Write,
) -> Result<u8, CliError> {
    let report = SolveReport::run(None, args.case, &args.parts.parts(), args.tol);
    report.write(out, args.output)?;
    Ok(match report.outcome {
        Outcome::Unique | Outcome::Two => EXIT_OK,
        Outcome::None => EXIT_NO_SOLUTION,
        Outcome::Error => {
            writeln!(err, "error: {}", report.reason.as_deref().unwrap_or("invalid input"))?;
            EXIT_INPUT_ERROR
        }
    })
}

pub fn run_verify(
    args: &VerifyArgs,
    out: &mut impl Write,
    _err: &mut impl Write,
) -> Result<u8, CliError> {
    let triangle = args.parts.parts().to_triangle()?;
    let verification = verify(&triangle, args.tol)?;
    let report = VerifyReport {
        triangle,
        verification,
    };
    report.write(out, args.output)?;
    Ok(if verification.passed {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

pub fn run_batch(
    args: &BatchArgs,
    out: &mut impl Write,
    err: &mut impl Write,
) -> Result<u8, CliError> {
    if !(args.tol.is_finite() && args.tol > 0.0) {
        return Err(mollweide::Error::InvalidTolerance(args.tol).into());
    }
    let text = std::fs::read_to_string(&args.input).map_err(|source| CliError::Read {
        path: args.input.display().to_string(),
        source,
    })?;
    let (format, guessed) = InputFormat::detect(&args.input);
    if guessed {
        writeln!(
            err,
            "warning: unrecognised extension on {}, reading it as JSON lines",
            args.input.display()
        )?;
    }
    let records = match format {
        InputFormat::Csv => batch::parse_csv(&text)?,
        InputFormat::JsonLines => batch::parse_json_lines(&text),
    };

    let reports = batch::process(records, args.tol);
    for report in &reports {
        report.write(out, args.output)?;
    }
    let summary = Summary::tally(&reports);
    summary.write(out, args.output)?;
    Ok(if summary.error == 0 {
        EXIT_OK
    } else {
        EXIT_INPUT_ERROR
    })
}
