//! Suite reports: deterministic check lists with machine- and
//! human-readable renderings.

use std::io::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "evidence-pass")]
    EvidencePass,
    #[serde(rename = "evidence-fail")]
    EvidenceFail,
    #[serde(rename = "skipped")]
    Skipped,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::EvidencePass => "evidence-pass",
            CheckStatus::EvidenceFail => "evidence-fail",
            CheckStatus::Skipped => "skipped",
        }
    }

    pub fn is_failure(self) -> bool {
        matches!(self, CheckStatus::Fail | CheckStatus::EvidenceFail)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), status: CheckStatus::Pass, witness: None }
    }

    pub fn pass_with(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Check { name: name.into(), status: CheckStatus::Pass, witness: Some(witness.into()) }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Check { name: name.into(), status: CheckStatus::Fail, witness: Some(witness.into()) }
    }

    pub fn evidence(name: impl Into<String>, ok: bool, witness: Option<String>) -> Self {
        Check {
            name: name.into(),
            status: if ok { CheckStatus::EvidencePass } else { CheckStatus::EvidenceFail },
            witness,
        }
    }

    pub fn skipped(name: impl Into<String>, why: impl Into<String>) -> Self {
        Check { name: name.into(), status: CheckStatus::Skipped, witness: Some(why.into()) }
    }

    pub fn outcome(name: impl Into<String>, violation: Option<String>) -> Self {
        match violation {
            None => Check::pass(name),
            Some(w) => Check::fail(name, w),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub config: serde_json::Value,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn any_failure(&self) -> bool {
        self.checks.iter().any(|c| c.status.is_failure())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    /// Fixed-width table rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite: {}\n", self.suite));
        out.push_str(&format!("config: {}\n", self.config));
        let name_width = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(4)
            .max(5);
        out.push_str(&format!("{:<name_width$}  {:<13}  witness\n", "check", "status"));
        for c in &self.checks {
            out.push_str(&format!(
                "{:<name_width$}  {:<13}  {}\n",
                c.name,
                c.status.as_str(),
                c.witness.as_deref().unwrap_or("-")
            ));
        }
        out.push_str(&format!("elapsed_ms: {}\n", self.elapsed_ms));
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

/// Render a report and optionally write it to a file.
pub fn emit_report(report: &Report, format: ReportFormat, out: Option<&Path>) -> Result<Vec<u8>> {
    let bytes = match format {
        ReportFormat::Text => report.to_text().into_bytes(),
        ReportFormat::Json => report.to_json().into_bytes(),
    };
    if let Some(path) = out {
        let mut f = std::fs::File::create(path)?;
        f.write_all(&bytes)?;
    }
    Ok(bytes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_schema_field_names() {
        let report = Report {
            suite: "demo".into(),
            config: serde_json::json!({"m": 1}),
            checks: vec![
                Check::pass("alpha"),
                Check::fail("beta", "witness text"),
                Check::evidence("gamma", true, None),
            ],
            elapsed_ms: 7,
        };
        let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(v["suite"], "demo");
        assert_eq!(v["config"]["m"], 1);
        assert_eq!(v["checks"][0]["name"], "alpha");
        assert_eq!(v["checks"][0]["status"], "pass");
        assert_eq!(v["checks"][0]["witness"], serde_json::Value::Null);
        assert_eq!(v["checks"][1]["status"], "fail");
        assert_eq!(v["checks"][1]["witness"], "witness text");
        assert_eq!(v["checks"][2]["status"], "evidence-pass");
        assert!(v["elapsed_ms"].is_u64());
        assert!(report.any_failure());
    }

    #[test]
    fn empty_check_list_is_valid() {
        let report = Report {
            suite: "empty".into(),
            config: serde_json::json!({}),
            checks: vec![],
            elapsed_ms: 0,
        };
        let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(v["checks"].as_array().unwrap().len(), 0);
        assert!(!report.any_failure());
    }
}
