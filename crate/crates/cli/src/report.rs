//! Report records and their two renderings.
//!
//! Text mode rounds every part to two decimals; json-lines mode writes one
//! JSON object per line with full-precision numbers.

use std::io::Write;

use mollweide::{solve, verify, ResidualReport, SolveOutcome, Triangle};
use serde::Serialize;

use crate::error::CliError;
use crate::parts::{Case, Parts};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    JsonLines,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    None,
    Unique,
    Two,
    Error,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::None => "none",
            Outcome::Unique => "unique",
            Outcome::Two => "two",
            Outcome::Error => "error",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<Case>,
    pub outcome: Outcome,
    pub triangles: Vec<Triangle>,
    pub verification: Vec<ResidualReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl SolveReport {
    pub fn error(id: Option<String>, case: Option<Case>, reason: impl ToString) -> Self {
        SolveReport {
            id,
            case,
            outcome: Outcome::Error,
            triangles: Vec::new(),
            verification: Vec::new(),
            reason: Some(reason.to_string()),
        }
    }

    /// Solve (or, for [`Case::Verify`], check) one set of parts.
    pub fn run(id: Option<String>, case: Case, parts: &Parts, tolerance: f64) -> Self {
        match Self::try_run(id.clone(), case, parts, tolerance) {
            Ok(report) => report,
            Err(e) => Self::error(id, Some(case), e),
        }
    }

    fn try_run(
        id: Option<String>,
        case: Case,
        parts: &Parts,
        tolerance: f64,
    ) -> Result<Self, CliError> {
        let (outcome, triangles, reason) = if case == Case::Verify {
            (Outcome::Unique, vec![parts.to_triangle()?], None)
        } else {
            let (spec, labeling) = parts.to_spec(case)?;
            match solve(&spec)? {
                SolveOutcome::NoSolution { reason } => (Outcome::None, Vec::new(), Some(reason)),
                SolveOutcome::Unique(t) => (Outcome::Unique, vec![labeling.restore(&t)], None),
                SolveOutcome::Two(t1, t2) => (
                    Outcome::Two,
                    vec![labeling.restore(&t1), labeling.restore(&t2)],
                    None,
                ),
            }
        };
        let verification = triangles
            .iter()
            .map(|t| verify(t, tolerance))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SolveReport {
            id,
            case: Some(case),
            outcome,
            triangles,
            verification,
            reason,
        })
    }

    pub fn write(&self, out: &mut impl Write, format: OutputFormat) -> Result<(), CliError> {
        match format {
            OutputFormat::JsonLines => write_json_line(out, self),
            OutputFormat::Text => self.write_text(out),
        }
    }

    fn write_text(&self, out: &mut impl Write) -> Result<(), CliError> {
        let mut heading = String::new();
        if let Some(id) = &self.id {
            heading.push_str(id);
            heading.push_str(": ");
        }
        heading.push_str(self.outcome.as_str());
        if let Some(case) = self.case {
            heading.push_str(&format!(" ({case})"));
        }
        writeln!(out, "{heading}")?;

        let numbered = self.triangles.len() > 1;
        for (i, (t, v)) in self.triangles.iter().zip(&self.verification).enumerate() {
            let label = if numbered {
                format!("triangle {}", i + 1)
            } else {
                "triangle".to_string()
            };
            writeln!(out, "  {label}: {}", format_triangle(t))?;
            writeln!(out, "  verification: {}", format_verdict(v))?;
        }
        if let Some(reason) = &self.reason {
            writeln!(out, "  reason: {reason}")?;
        }
        Ok(())
    }
}

pub fn format_triangle(t: &Triangle) -> String {
    format!(
        "alpha={:.2}° beta={:.2}° gamma={:.2}° a={:.2} b={:.2} c={:.2}",
        t.alpha().degrees(),
        t.beta().degrees(),
        t.gamma().degrees(),
        t.a().get(),
        t.b().get(),
        t.c().get()
    )
}

fn format_verdict(v: &ResidualReport) -> String {
    format!(
        "{} (max normalized residual {:.3e}, tolerance {:e})",
        if v.passed { "passed" } else { "FAILED" },
        v.max_normalized_residual,
        v.tolerance
    )
}

/// Report of the `verify` subcommand.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub triangle: Triangle,
    pub verification: ResidualReport,
}

impl VerifyReport {
    pub fn write(&self, out: &mut impl Write, format: OutputFormat) -> Result<(), CliError> {
        if format == OutputFormat::JsonLines {
            return write_json_line(out, self);
        }
        let v = &self.verification;
        writeln!(out, "triangle: {}", format_triangle(&self.triangle))?;
        let rows: [(&str, &[f64]); 5] = [
            ("mollweide sin form", &v.mollweide_sin),
            ("mollweide cos form", &v.mollweide_cos),
            ("law of tangents", &v.law_of_tangents),
            ("law of cosines / c^2", &v.cosines),
            ("law of sines spread", std::slice::from_ref(&v.sines_spread)),
        ];
        for (name, values) in rows {
            let cells: Vec<String> = values.iter().map(|x| format!("{x:+.3e}")).collect();
            writeln!(out, "  {name:<22} {}", cells.join("  "))?;
        }
        writeln!(out, "verification: {}", format_verdict(v))?;
        Ok(())
    }
}

/// Counts over a batch; written after the per-record reports.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub records: usize,
    pub unique: usize,
    pub two: usize,
    pub none: usize,
    pub error: usize,
}

impl Summary {
    pub fn tally<'a>(reports: impl IntoIterator<Item = &'a SolveReport>) -> Summary {
        let mut s = Summary::default();
        for r in reports {
            s.records += 1;
            match r.outcome {
                Outcome::Unique => s.unique += 1,
                Outcome::Two => s.two += 1,
                Outcome::None => s.none += 1,
                Outcome::Error => s.error += 1,
            }
        }
        s
    }

    pub fn write(&self, out: &mut impl Write, format: OutputFormat) -> Result<(), CliError> {
        match format {
            OutputFormat::JsonLines => {
                #[derive(Serialize)]
                struct Line<'a> {
                    summary: &'a Summary,
                }
                write_json_line(out, &Line { summary: self })
            }
            OutputFormat::Text => {
                writeln!(
                    out,
                    "summary: records={} unique={} two={} none={} error={}",
                    self.records, self.unique, self.two, self.none, self.error
                )?;
                Ok(())
            }
        }
    }
}

fn write_json_line<T: Serialize>(out: &mut impl Write, value: &T) -> Result<(), CliError> {
    let line = serde_json::to_string(value)
        .map_err(|e| CliError::Input(format!("cannot serialize report: {e}")))?;
    writeln!(out, "{line}")?;
    Ok(())
}
