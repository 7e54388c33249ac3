//! Serializable verification reports shared by the census suites, the
//! constant tables and the command-line tool.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Version of the report layout below; bumped on any field change.
pub const SCHEMA_VERSION: u32 = 1;

/// Human-readable description of the JSON report layout.
pub const REPORT_SCHEMA: &str = r#"[
  {
    "tool_version": string,
    "suite": string,
    "params": { string: string },
    "exhaustive": bool,
    "counts": { string: u64 },
    "results": [
      { "name": string, "expected": string, "expected_provenance": string, "actual": string, "pass": bool }
    ],
    "elapsed_ms": u64            (omitted under --no-timing)
  }
]
TSV: suite, name, expected, actual, pass, expected_provenance; one row per result."#;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub expected: String,
    /// Where the expected value comes from: a quoted statement, a closed
    /// form or an exhaustive oracle.
    pub expected_provenance: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub tool_version: String,
    pub suite: String,
    pub params: BTreeMap<String, String>,
    /// False when any count comes from sampling.
    pub exhaustive: bool,
    pub counts: BTreeMap<String, u64>,
    pub results: Vec<CheckResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CensusReport {
    pub fn new(suite: &str) -> Self {
        Self {
            tool_version: TOOL_VERSION.into(),
            suite: suite.into(),
            params: BTreeMap::new(),
            exhaustive: true,
            counts: BTreeMap::new(),
            results: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Display) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }

    pub fn count(&mut self, key: &str, value: u64) {
        self.counts.insert(key.into(), value);
    }

    pub fn check(
        &mut self,
        name: &str,
        expected: impl Display,
        provenance: &str,
        actual: impl Display,
        pass: bool,
    ) {
        self.results.push(CheckResult {
            name: name.into(),
            expected: expected.to_string(),
            expected_provenance: provenance.into(),
            actual: actual.to_string(),
            pass,
        });
    }

    /// Records a check that passes when the rendered values agree.
    pub fn check_eq(
        &mut self,
        name: &str,
        expected: impl Display,
        provenance: &str,
        actual: impl Display,
    ) {
        let (e, a) = (expected.to_string(), actual.to_string());
        let pass = e == a;
        self.check(name, e, provenance, a, pass);
    }

    pub fn pass(&self) -> bool {
        !self.results.is_empty() && self.results.iter().all(|r| r.pass)
    }

    pub fn timed(mut self, start: Option<Instant>) -> Self {
        self.elapsed_ms = start.map(|s| s.elapsed().as_millis() as u64);
        self
    }

    /// Same report without timing, for comparisons across runs.
    pub fn untimed(&self) -> Self {
        Self {
            elapsed_ms: None,
            ..self.clone()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

pub fn to_json(reports: &[CensusReport]) -> Result<String> {
    serde_json::to_string_pretty(reports).map_err(|e| Error::Io(e.to_string()))
}

pub fn from_json(s: &str) -> Result<Vec<CensusReport>> {
    serde_json::from_str(s).map_err(|e| Error::InvalidArgument(format!("report JSON: {e}")))
}

fn tsv_field(s: &str) -> String {
    s.replace(['\t', '\n'], " ")
}

/// One header line, then one row per check.
pub fn to_tsv(reports: &[CensusReport]) -> String {
    let mut out = String::from("suite\tname\texpected\tactual\tpass\texpected_provenance\n");
    for r in reports {
        for c in &r.results {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\n",
                tsv_field(&r.suite),
                tsv_field(&c.name),
                tsv_field(&c.expected),
                tsv_field(&c.actual),
                c.pass,
                tsv_field(&c.expected_provenance)
            ));
        }
    }
    out
}

pub fn render(reports: &[CensusReport], format: Format) -> Result<String> {
    if reports.is_empty() {
        return Err(Error::InvalidArgument("no reports to emit".into()));
    }
    match format {
        Format::Json => to_json(reports),
        Format::Tsv => Ok(to_tsv(reports)),
    }
}

/// Writes to `path`, or to stdout when `path` is `None`.
pub fn emit_report(
    reports: &[CensusReport],
    format: Format,
    path: Option<&std::path::Path>,
) -> Result<()> {
    let text = render(reports, format)?;
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            if text.ends_with('\n') {
                print!("{text}");
            } else {
                println!("{text}");
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> CensusReport {
        let mut r = CensusReport::new("demo").param("q", 2);
        r.count("solutions", 7);
        r.check_eq("count", 7, "closed form", 7);
        r.check("tab\tname", "a", "oracle", "b", false);
        r
    }

    #[test]
    fn json_round_trip() {
        let r = vec![sample()];
        let s = to_json(&r).unwrap();
        assert_eq!(from_json(&s).unwrap(), r);
        assert!(!s.contains("elapsed_ms"));
        assert!(!r[0].pass());
    }

    #[test]
    fn tsv_has_one_row_per_result() {
        let t = to_tsv(&[sample()]);
        assert_eq!(t.lines().count(), 3);
        assert!(t.lines().all(|l| l.split('\t').count() == 6));
        assert!(render(&[], Format::Tsv).is_err());
    }
}
