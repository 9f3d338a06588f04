//! Result records and their json, csv and text renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Match,
    Mismatch,
    Pass,
    Fail,
}

impl Verdict {
    pub fn ok(self) -> bool {
        matches!(self, Verdict::Match | Verdict::Pass)
    }

    pub fn check(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn compare(ok: bool) -> Self {
        if ok {
            Verdict::Match
        } else {
            Verdict::Mismatch
        }
    }

    fn label(self) -> &'static str {
        match self {
            Verdict::Match => "MATCH",
            Verdict::Mismatch => "MISMATCH",
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub expected: Option<String>,
    pub got: String,
    pub verdict: Verdict,
}

impl Entry {
    pub fn compare(name: impl Into<String>, expected: impl Into<String>, got: impl Into<String>) -> Self {
        let (expected, got) = (expected.into(), got.into());
        let verdict = Verdict::compare(expected == got);
        Self { name: name.into(), expected: Some(expected), got, verdict }
    }

    pub fn value(name: impl Into<String>, got: impl Into<String>) -> Self {
        Self { name: name.into(), expected: None, got: got.into(), verdict: Verdict::Pass }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    pub results: Vec<Entry>,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|e| e.verdict.ok())
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("report serializes") + "\n",
            Format::Csv => self.csv(),
            Format::Text => self.text(),
        }
    }

    /// Columns: `name,expected,got,verdict`.
    fn csv(&self) -> String {
        let mut out = String::from("name,expected,got,verdict\n");
        for e in &self.results {
            let fields = [e.name.as_str(), e.expected.as_deref().unwrap_or(""), e.got.as_str(), e.verdict.label()];
            let line: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    fn text(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect();
        writeln!(out, "{} {}", self.command, params.join(" ")).unwrap();
        let width = self.results.iter().map(|e| e.name.chars().count()).max().unwrap_or(0);
        for e in &self.results {
            let pad = " ".repeat(width - e.name.chars().count());
            match &e.expected {
                Some(x) if x != &e.got => {
                    writeln!(out, "  {}{pad}  {:<8}  got {}  expected {}", e.name, e.verdict.label(), e.got, x).unwrap()
                }
                _ => writeln!(out, "  {}{pad}  {:<8}  {}", e.name, e.verdict.label(), e.got).unwrap(),
            }
        }
        let failed = self.results.iter().filter(|e| !e.verdict.ok()).count();
        writeln!(out, "{} checks, {} failed, {} ms", self.results.len(), failed, self.elapsed_ms).unwrap();
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
