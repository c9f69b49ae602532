use std::fmt::Write as _;

use anyhow::Result;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn of(path: &str, bytes: &[u8]) -> Self {
        InputDigest {
            path: path.to_string(),
            sha256: hex::encode(Sha256::digest(bytes)),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Caps {
    pub group_order: usize,
    pub max_degree: usize,
    pub hh_cochain_cap: usize,
}

/// Rows for CSV and text output. Column order is part of the interface.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table {
            headers: headers.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub seed: u64,
    pub caps: Caps,
    pub passed: bool,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Table>,
}

impl Report {
    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(self)? + "\n"),
            Format::Csv => self.render_csv(),
            Format::Text => Ok(self.render_text()),
        }
    }

    fn header_lines(&self) -> Vec<String> {
        let mut out = vec![
            format!("command: {}", self.command),
            format!("seed: {}", self.seed),
            format!(
                "caps: group_order={} max_degree={} hh_cochain_cap={}",
                self.caps.group_order, self.caps.max_degree, self.caps.hh_cochain_cap
            ),
        ];
        for i in &self.inputs {
            out.push(format!("input: {} sha256={}", i.path, i.sha256));
        }
        out.push(format!("passed: {}", self.passed));
        out
    }

    /// Metadata goes in leading `#` lines; the records follow.
    fn render_csv(&self) -> Result<String> {
        let mut out = String::new();
        for line in self.header_lines() {
            writeln!(out, "# {line}")?;
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        match &self.table {
            Some(t) => {
                w.write_record(&t.headers)?;
                for r in &t.rows {
                    w.write_record(r)?;
                }
            }
            None => {
                w.write_record(["field", "value"])?;
                if let Value::Object(map) = &self.result {
                    for (k, v) in map {
                        let v = match v {
                            Value::String(s) => s.clone(),
                            other => other.to_string(),
                        };
                        w.write_record([k.as_str(), v.as_str()])?;
                    }
                }
            }
        }
        out.push_str(std::str::from_utf8(&w.into_inner()?)?);
        Ok(out)
    }

    fn render_text(&self) -> String {
        let mut out = self.header_lines().join("\n");
        out.push('\n');
        match &self.table {
            Some(t) => {
                let widths: Vec<usize> = (0..t.headers.len())
                    .map(|c| {
                        t.rows
                            .iter()
                            .map(|r| r[c].len())
                            .chain([t.headers[c].len()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |cells: &[String]| {
                    cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:<w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                        .trim_end()
                        .to_string()
                };
                out.push_str(&line(&t.headers));
                out.push('\n');
                for r in &t.rows {
                    out.push_str(&line(r));
                    out.push('\n');
                }
            }
            None => {
                out.push_str(&serde_json::to_string_pretty(&self.result).unwrap_or_default());
                out.push('\n');
            }
        }
        out
    }
}
