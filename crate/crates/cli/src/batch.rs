//! Batch input: comma-separated tables with a header row, or one JSON object
//! per line.
//!
//! Each record is parsed on its own; a malformed record becomes an `error`
//! report and never stops the rest of the batch.

use std::collections::HashSet;
use std::path::Path;

use mollweide::batch::map_ordered;
use serde_json::Value;

use crate::error::CliError;
use crate::parts::{Case, Parts};
use crate::report::SolveReport;

const KNOWN_FIELDS: [&str; 9] = ["id", "case", "alpha", "beta", "gamma", "a", "b", "c", "tol"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Csv,
    JsonLines,
}

impl InputFormat {
    /// Pick the format from the file extension. The second value is true when
    /// the extension was not recognised and the default was used.
    pub fn detect(path: &Path) -> (InputFormat, bool) {
        let ext = path
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase);
        match ext.as_deref() {
            Some("csv") => (InputFormat::Csv, false),
            Some("jsonl" | "ndjson" | "json") => (InputFormat::JsonLines, false),
            _ => (InputFormat::JsonLines, true),
        }
    }
}

/// One input record, validated as far as field presence and types.
#[derive(Debug, Clone, PartialEq)]
pub struct BatchRecord {
    pub id: String,
    pub case: Case,
    pub parts: Parts,
    pub tol: Option<f64>,
}

/// A record that could not be parsed, with whatever id could be recovered.
#[derive(Debug, Clone, PartialEq)]
pub struct RecordError {
    pub id: Option<String>,
    pub case: Option<Case>,
    pub reason: String,
}

pub type ParsedRecord = Result<BatchRecord, RecordError>;

#[derive(Default)]
struct Fields {
    id: Option<String>,
    case: Option<String>,
    numbers: Vec<(String, f64)>,
}

impl Fields {
    fn finish(self, location: &str) -> ParsedRecord {
        let id = self.id.filter(|s| !s.trim().is_empty());
        let fail = |case: Option<Case>, reason: String| RecordError {
            id: id.clone().or_else(|| Some(location.to_string())),
            case,
            reason,
        };
        let Some(case_name) = self.case else {
            return Err(fail(None, "missing field `case`".into()));
        };
        let case = Case::parse(&case_name).map_err(|e| fail(None, e.to_string()))?;
        let Some(id) = id.clone() else {
            return Err(fail(Some(case), "missing field `id`".into()));
        };

        let mut parts = Parts::default();
        let mut tol = None;
        for (name, value) in self.numbers {
            let slot = match name.as_str() {
                "alpha" => &mut parts.angles[0],
                "beta" => &mut parts.angles[1],
                "gamma" => &mut parts.angles[2],
                "a" => &mut parts.sides[0],
                "b" => &mut parts.sides[1],
                "c" => &mut parts.sides[2],
                "tol" => &mut tol,
                other => return Err(fail(Some(case), format!("unknown field `{other}`"))),
            };
            *slot = Some(value);
        }
        Ok(BatchRecord {
            id,
            case,
            parts,
            tol,
        })
    }
}

fn parse_number(name: &str, raw: &str) -> Result<f64, String> {
    raw.trim()
        .parse::<f64>()
        .map_err(|_| format!("field `{name}` is not a number: `{raw}`"))
}

pub fn parse_json_lines(text: &str) -> Vec<ParsedRecord> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| parse_json_record(line, &format!("line {}", i + 1)))
        .collect()
}

fn parse_json_record(line: &str, location: &str) -> ParsedRecord {
    let error = |id: Option<String>, reason: String| RecordError {
        id: id.or_else(|| Some(location.to_string())),
        case: None,
        reason,
    };
    let value: Value =
        serde_json::from_str(line).map_err(|e| error(None, format!("invalid JSON: {e}")))?;
    let Value::Object(map) = value else {
        return Err(error(None, "record is not a JSON object".into()));
    };
    let id = match map.get("id") {
        Some(Value::String(s)) => Some(s.clone()),
        Some(Value::Number(n)) => Some(n.to_string()),
        _ => None,
    };

    let mut fields = Fields {
        id: id.clone(),
        ..Fields::default()
    };
    for (key, value) in &map {
        match (key.as_str(), value) {
            ("id", _) => {}
            ("case", Value::String(s)) => fields.case = Some(s.clone()),
            ("case", _) => return Err(error(id, "field `case` must be a string".into())),
            (_, Value::Null) => {}
            (name, Value::Number(n)) => {
                let v = n
                    .as_f64()
                    .ok_or_else(|| error(id.clone(), format!("field `{name}` out of range")))?;
                fields.numbers.push((name.to_string(), v));
            }
            (name, Value::String(s)) if KNOWN_FIELDS.contains(&name) => {
                let v = parse_number(name, s).map_err(|e| error(id.clone(), e))?;
                fields.numbers.push((name.to_string(), v));
            }
            (name, _) => {
                return Err(error(id, format!("field `{name}` has an unsupported type")));
            }
        }
    }
    fields.finish(location)
}

/// Parse a CSV table. An unknown header column is a file-level error.
pub fn parse_csv(text: &str) -> Result<Vec<ParsedRecord>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let headers: Vec<String> = reader
        .headers()?
        .iter()
        .map(|h| h.to_ascii_lowercase())
        .collect();
    if let Some(bad) = headers
        .iter()
        .find(|h| !h.is_empty() && !KNOWN_FIELDS.contains(&h.as_str()))
    {
        return Err(CliError::Input(format!("unknown CSV column `{bad}`")));
    }

    let mut records = Vec::new();
    for (i, row) in reader.records().enumerate() {
        let location = format!("row {}", i + 1);
        let row = match row {
            Ok(row) => row,
            Err(e) => {
                records.push(Err(RecordError {
                    id: Some(location),
                    case: None,
                    reason: e.to_string(),
                }));
                continue;
            }
        };
        records.push(parse_csv_row(&headers, &row, &location));
    }
    Ok(records)
}

fn parse_csv_row(headers: &[String], row: &csv::StringRecord, location: &str) -> ParsedRecord {
    let mut fields = Fields::default();
    let id_column = headers.iter().position(|h| h == "id");
    fields.id = id_column.and_then(|i| row.get(i)).map(str::to_string);

    if row.len() != headers.len() {
        return Err(RecordError {
            id: fields.id.filter(|s| !s.is_empty()).or(Some(location.into())),
            case: None,
            reason: format!("expected {} columns, found {}", headers.len(), row.len()),
        });
    }
    for (name, raw) in headers.iter().zip(row.iter()) {
        match name.as_str() {
            "id" | "" => {}
            "case" => fields.case = Some(raw.to_string()).filter(|s| !s.is_empty()),
            _ if raw.is_empty() => {}
            _ => match parse_number(name, raw) {
                Ok(v) => fields.numbers.push((name.clone(), v)),
                Err(reason) => {
                    return Err(RecordError {
                        id: fields.id.filter(|s| !s.is_empty()).or(Some(location.into())),
                        case: None,
                        reason,
                    })
                }
            },
        }
    }
    fields.finish(location)
}

/// Solve every record, concurrently when enabled, returning reports in input
/// order. Later records reusing an earlier id are reported as errors.
pub fn process(records: Vec<ParsedRecord>, default_tol: f64) -> Vec<SolveReport> {
    let mut seen = HashSet::new();
    let checked: Vec<ParsedRecord> = records
        .into_iter()
        .map(|record| match record {
            Ok(r) if !seen.insert(r.id.clone()) => Err(RecordError {
                reason: format!("duplicate id `{}`", r.id),
                id: Some(r.id),
                case: Some(r.case),
            }),
            other => other,
        })
        .collect();

    map_ordered(&checked, |record| match record {
        Ok(r) => SolveReport::run(
            Some(r.id.clone()),
            r.case,
            &r.parts,
            r.tol.unwrap_or(default_tol),
        ),
        Err(e) => SolveReport::error(e.id.clone(), e.case, &e.reason),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Outcome;

    #[test]
    fn detects_format_by_extension() {
        assert_eq!(InputFormat::detect(Path::new("x.CSV")), (InputFormat::Csv, false));
        assert_eq!(
            InputFormat::detect(Path::new("x.jsonl")),
            (InputFormat::JsonLines, false)
        );
        assert_eq!(
            InputFormat::detect(Path::new("records.txt")),
            (InputFormat::JsonLines, true)
        );
    }

    #[test]
    fn json_lines_records() {
        let text = r#"{"id":"ex1","case":"aas","alpha":72,"beta":40,"c":15}

{"id":"ex2","case":"sas","a":10,"gamma":40,"b":4,"tol":1e-6}
not json
{"id":"x","case":"sss","a":3,"b":4,"c":5,"d":1}
"#;
        let records = parse_json_lines(text);
        assert_eq!(records.len(), 4);
        let ex2 = records[1].as_ref().unwrap();
        assert_eq!(ex2.tol, Some(1e-6));
        assert_eq!(ex2.parts.angles[2], Some(40.0));
        let bad = records[2].as_ref().unwrap_err();
        assert_eq!(bad.id.as_deref(), Some("line 4"));
        let unknown = records[3].as_ref().unwrap_err();
        assert_eq!(unknown.id.as_deref(), Some("x"));
        assert!(unknown.reason.contains("`d`"));
    }

    #[test]
    fn csv_records() {
        let text = "id,case,alpha,beta,gamma,a,b,c,tol\n\
                    ex1,aas,72,40,,,,15,\n\
                    ex2,sas,,,40,10,4,,\n\
                    oops,sss,,,,3,four,5,\n";
        let records = parse_csv(text).unwrap();
        assert_eq!(records.len(), 3);
        assert_eq!(records[0].as_ref().unwrap().parts.sides[2], Some(15.0));
        assert_eq!(records[1].as_ref().unwrap().case, Case::Sas);
        let bad = records[2].as_ref().unwrap_err();
        assert_eq!(bad.id.as_deref(), Some("oops"));
        assert!(bad.reason.contains("four"));
    }

    #[test]
    fn csv_unknown_column_is_fatal() {
        assert!(parse_csv("id,case,delta\n1,sss,3\n").is_err());
    }

    #[test]
    fn duplicate_ids_are_errors() {
        let text = r#"{"id":"t","case":"sss","a":3,"b":4,"c":5}
{"id":"t","case":"sss","a":1,"b":1,"c":1}"#;
        let reports = process(parse_json_lines(text), 1e-9);
        assert_eq!(reports[0].outcome, Outcome::Unique);
        assert_eq!(reports[1].outcome, Outcome::Error);
        assert!(reports[1].reason.as_ref().unwrap().contains("duplicate"));
    }

    #[test]
    fn record_tolerance_wins() {
        let text = r#"{"id":"loose","case":"verify","alpha":72,"beta":40,"gamma":68,"a":15.39,"b":10.40,"c":15,"tol":1e-2}
{"id":"strict","case":"verify","alpha":72,"beta":40,"gamma":68,"a":15.39,"b":10.40,"c":15}"#;
        let reports = process(parse_json_lines(text), 1e-9);
        assert!(reports[0].verification[0].passed);
        assert!(!reports[1].verification[0].passed);
    }
}
