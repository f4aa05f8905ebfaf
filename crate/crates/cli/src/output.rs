//! Output records and their text, JSON and TSV encodings.
//!
//! Every number in a payload is a decimal string.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Tsv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub elapsed_us: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    Value(String),
    Series {
        order: usize,
        coefficients: Vec<String>,
    },
    Table {
        columns: Vec<String>,
        rows: Vec<Vec<String>>,
    },
    Checks(Vec<CheckRecord>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub result: Payload,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
}

impl OutputRecord {
    pub fn new(command: &str, result: Payload) -> Self {
        Self {
            command: command.to_owned(),
            parameters: BTreeMap::new(),
            result,
            verified: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_owned(), value.to_string());
        self
    }

    pub fn verified(mut self, verified: bool) -> Self {
        self.verified = Some(verified);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
            Format::Tsv => self.to_tsv(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("output records serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.command);
        for (k, v) in &self.parameters {
            let _ = write!(out, "  {k}={v}");
        }
        out.push('\n');
        match &self.result {
            Payload::Value(v) => {
                let _ = writeln!(out, "{v}");
            }
            Payload::Series {
                order,
                coefficients,
            } => {
                let _ = writeln!(out, "{} + O(x^{})", coefficients.join(", "), order + 1);
            }
            Payload::Table { columns, rows } => {
                out.push_str(&aligned(columns, rows));
            }
            Payload::Checks(checks) => {
                let columns = ["status", "time_ms", "suite", "identity"].map(String::from);
                let rows: Vec<Vec<String>> = checks
                    .iter()
                    .map(|c| {
                        let mut name = c.name.clone();
                        if let Some(d) = &c.detail {
                            let _ = write!(name, " ({d})");
                        }
                        vec![
                            if c.passed { "PASS" } else { "FAIL" }.to_owned(),
                            micros_as_millis(&c.elapsed_us),
                            c.suite.clone(),
                            name,
                        ]
                    })
                    .collect();
                out.push_str(&aligned(&columns, &rows));
                let passed = checks.iter().filter(|c| c.passed).count();
                let _ = writeln!(out, "{passed}/{} identities hold", checks.len());
            }
        }
        if let Some(v) = self.verified {
            let _ = writeln!(out, "verified: {v}");
        }
        out
    }

    fn to_tsv(&self) -> String {
        let mut out = String::new();
        match &self.result {
            Payload::Value(v) => {
                out.push_str("key\tvalue\n");
                for (k, val) in &self.parameters {
                    let _ = writeln!(out, "{k}\t{val}");
                }
                let _ = writeln!(out, "result\t{v}");
            }
            Payload::Series { coefficients, .. } => {
                out.push_str("power\tcoefficient\n");
                for (i, c) in coefficients.iter().enumerate() {
                    let _ = writeln!(out, "{i}\t{c}");
                }
            }
            Payload::Table { columns, rows } => {
                let _ = writeln!(out, "{}", columns.join("\t"));
                for row in rows {
                    let _ = writeln!(out, "{}", row.join("\t"));
                }
            }
            Payload::Checks(checks) => {
                out.push_str("suite\tidentity\tpassed\telapsed_us\n");
                for c in checks {
                    let _ = writeln!(out, "{}\t{}\t{}\t{}", c.suite, c.name, c.passed, c.elapsed_us);
                }
            }
        }
        if let Some(v) = self.verified {
            let _ = writeln!(out, "verified\t{v}");
        }
        out
    }
}

fn micros_as_millis(us: &str) -> String {
    match us.parse::<u128>() {
        Ok(us) => format!("{}.{:03}", us / 1000, us % 1000),
        Err(_) => us.to_owned(),
    }
}

fn is_numeric(cell: &str) -> bool {
    let digits = cell.strip_prefix('-').unwrap_or(cell);
    !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit() || c == '.')
}

/// Text columns; all-numeric columns are right-aligned. Rows may be ragged.
fn aligned(columns: &[String], rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(Vec::len).chain([columns.len()]).max().unwrap_or(0);
    let mut widths = vec![0; width];
    for row in std::iter::once(columns).chain(rows.iter().map(Vec::as_slice)) {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let numeric: Vec<bool> = (0..width)
        .map(|i| rows.iter().filter_map(|r| r.get(i)).all(|c| is_numeric(c)))
        .collect();
    let mut out = String::new();
    for row in std::iter::once(columns).chain(rows.iter().map(Vec::as_slice)) {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            if numeric[i] {
                let _ = write!(line, "{cell:>w$}", w = widths[i]);
            } else {
                let _ = write!(line, "{cell:<w$}", w = widths[i]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_records() -> Vec<OutputRecord> {
        vec![
            OutputRecord::new("count", Payload::Value("7".into()))
                .param("n", 5)
                .param("mu", "2,1")
                .verified(true),
            OutputRecord::new(
                "series",
                Payload::Series {
                    order: 2,
                    coefficients: vec!["1".into(), "1".into(), "2".into()],
                },
            ),
            OutputRecord::new(
                "table",
                Payload::Table {
                    columns: vec!["k".into(), "0".into()],
                    rows: vec![vec!["0".into(), "0".into()], vec![]],
                },
            ),
            OutputRecord::new(
                "verify",
                Payload::Checks(vec![CheckRecord {
                    suite: "series".into(),
                    name: "x".into(),
                    passed: false,
                    elapsed_us: "1234".into(),
                    detail: Some("boom".into()),
                }]),
            ),
            OutputRecord::new(
                "table",
                Payload::Table {
                    columns: vec![],
                    rows: vec![],
                },
            ),
        ]
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        for record in sample_records() {
            let json = record.to_json();
            let parsed = OutputRecord::from_json(&json).unwrap();
            assert_eq!(parsed, record);
            assert_eq!(parsed.to_json(), json);
        }
    }

    #[test]
    fn text_rendering() {
        let text = sample_records()[0].render(Format::Text);
        assert_eq!(text, "count  mu=2,1  n=5\n7\nverified: true\n");
        let checks = sample_records()[3].render(Format::Text);
        assert!(checks.contains("FAIL"));
        assert!(checks.contains("1.234"));
        assert!(checks.contains("0/1 identities hold"));
    }

    #[test]
    fn tsv_rendering() {
        let tsv = sample_records()[1].render(Format::Tsv);
        assert_eq!(tsv, "power\tcoefficient\n0\t1\n1\t1\n2\t2\n");
    }
}
