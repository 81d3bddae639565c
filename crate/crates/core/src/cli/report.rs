use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::OutputFormat;

pub const SCHEMA_VERSION: u32 = 1;

/// Where the expected value of a check comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// a value printed in the published computation
    Published,
    /// follows from definitions or a direct count
    Elementary,
    /// recomputed here by an independent route
    Computed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Published => "published",
            Source::Elementary => "elementary",
            Source::Computed => "computed",
        }
    }
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub source: Source,
    pub expected: String,
    pub observed: String,
}

impl Check {
    pub fn new(id: &str, pass: bool, source: Source, expected: impl Into<String>, observed: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            source,
            expected: expected.into(),
            observed: observed.into(),
        }
    }

    pub fn skip(id: &str, source: Source, expected: impl Into<String>, why: impl Into<String>) -> Self {
        Check { id: id.into(), status: Status::Skip, source, expected: expected.into(), observed: why.into() }
    }

    pub fn error(id: &str, source: Source, expected: impl Into<String>, err: impl std::fmt::Display) -> Self {
        Check::new(id, false, source, expected, format!("error: {err}"))
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub version: String,
    /// informational lines printed ahead of the checks
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub checks: Vec<Check>,
    /// free-form sections, e.g. tables, keyed by name
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub data: BTreeMap<String, serde_json::Value>,
    /// seconds per check; the only nondeterministic part of a report
    pub timings: BTreeMap<String, f64>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            notes: Vec::new(),
            checks: Vec::new(),
            data: BTreeMap::new(),
            timings: BTreeMap::new(),
        }
    }

    /// Runs `f`, records its checks and its wall-clock time under `key`.
    pub fn timed<F: FnOnce() -> Vec<Check>>(&mut self, key: &str, f: F) {
        let t = std::time::Instant::now();
        let checks = f();
        self.timings.insert(key.into(), t.elapsed().as_secs_f64());
        self.checks.extend(checks);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn attach<T: Serialize>(&mut self, key: &str, value: &T) {
        self.data.insert(key.into(), serde_json::to_value(value).expect("serializable"));
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => serde_json::to_string_pretty(self).expect("serializable") + "\n",
            OutputFormat::Csv => {
                let mut s = String::from("id,status,source,expected,observed\n");
                for c in &self.checks {
                    let _ = writeln!(
                        s,
                        "{},{},{},{},{}",
                        csv_field(&c.id),
                        c.status.as_str(),
                        c.source.as_str(),
                        csv_field(&c.expected),
                        csv_field(&c.observed)
                    );
                }
                s
            }
            OutputFormat::Human => {
                let mut s = String::new();
                for n in &self.notes {
                    let _ = writeln!(s, "{n}");
                }
                let w = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
                for c in &self.checks {
                    let _ = writeln!(
                        s,
                        "{} {:<w$} [{}] expected {}; got {}",
                        c.status.as_str(),
                        c.id,
                        c.source.as_str(),
                        c.expected,
                        c.observed
                    );
                }
                s
            }
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
