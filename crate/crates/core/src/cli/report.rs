//! Report rendering.
//!
//! Machine format is one pretty-printed JSON document:
//!
//! ```text
//! {"schema_version": 1, "status": "ok" | "error", "verb": ..., "payload": {...}, "diagnostics": [...]}
//! ```
//!
//! Error payloads carry `code` and `message`. Human format is a two-column
//! table with nested keys joined by dots.

use serde_json::{json, Map, Value};

use super::CliError;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub verb: String,
    pub payload: Map<String, Value>,
    pub diagnostics: Vec<String>,
}

impl Report {
    pub fn new(verb: &str) -> Self {
        Report { verb: verb.to_string(), payload: Map::new(), diagnostics: Vec::new() }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.payload.insert(key.to_string(), value.into());
        self
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.payload.insert(key.to_string(), value.into());
    }
}

fn document(status: &str, verb: &str, payload: Value, diagnostics: &[String]) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "status": status,
        "verb": verb,
        "payload": payload,
        "diagnostics": diagnostics,
    })
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, rows);
            }
        }
        Value::String(s) => rows.push((prefix.to_string(), s.clone())),
        other => rows.push((prefix.to_string(), other.to_string())),
    }
}

fn table(rows: &[(String, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        out.push_str(&format!("{k:<width$}  {v}\n"));
    }
    out
}

pub fn render_ok(report: &Report, format: Format) -> String {
    match format {
        Format::Machine => {
            let doc = document("ok", &report.verb, Value::Object(report.payload.clone()), &report.diagnostics);
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Human => {
            let mut rows = vec![("verb".to_string(), report.verb.clone()), ("status".to_string(), "ok".to_string())];
            flatten("", &Value::Object(report.payload.clone()), &mut rows);
            rows.extend(report.diagnostics.iter().map(|d| ("note".to_string(), d.clone())));
            table(&rows)
        }
    }
}

pub fn render_error(verb: &str, err: &CliError, format: Format) -> String {
    match format {
        Format::Machine => {
            let payload = json!({ "code": err.code(), "message": err.message() });
            let doc = document("error", verb, payload, err.diagnostics());
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Human => {
            let mut out = format!("error[{}]: {}\n", err.code(), err.message());
            for d in err.diagnostics() {
                out.push_str(&format!("  {d}\n"));
            }
            out
        }
    }
}
