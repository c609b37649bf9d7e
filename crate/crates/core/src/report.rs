//! Run reports: named results and checks, printable as a table or as JSON.

use std::fmt::{self, Write as _};
use std::time::Duration;

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The check failed where failure is the predicted outcome.
    ExpectedNegative,
    /// Preconditions not met, or too expensive under the budget.
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::ExpectedNegative => "EXPECTED-NEGATIVE",
            Status::Skipped => "SKIPPED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    /// The identity being tested, written out as a formula.
    pub anchor: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedValue {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    /// `sha256:` of the input bytes.
    pub input_digest: Option<String>,
    pub results: Vec<NamedValue>,
    pub checks: Vec<Check>,
    pub elapsed_ms: u128,
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        RunReport {
            command,
            ..Default::default()
        }
    }

    pub fn result(&mut self, name: impl Into<String>, value: impl ToString) {
        self.results.push(NamedValue {
            name: name.into(),
            value: value.to_string(),
        });
    }

    /// Records a check that passes when `expected == actual`.
    pub fn compare(&mut self, name: impl Into<String>, anchor: &str, expected: impl ToString, actual: impl ToString) -> bool {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        self.push(name, anchor, expected, actual, status, None);
        status == Status::Pass
    }

    pub fn push(
        &mut self,
        name: impl Into<String>,
        anchor: &str,
        expected: impl ToString,
        actual: impl ToString,
        status: Status,
        note: Option<String>,
    ) {
        self.checks.push(Check {
            name: name.into(),
            anchor: anchor.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            status,
            pass: status != Status::Fail,
            note,
        });
    }

    pub fn skip(&mut self, name: impl Into<String>, anchor: &str, why: impl Into<String>) {
        self.push(name, anchor, "-", "-", Status::Skipped, Some(why.into()));
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn set_elapsed(&mut self, d: Duration) {
        self.elapsed_ms = d.as_millis();
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let _ = writeln!(out, "{} = {}", r.name, r.value);
        }
        if !self.checks.is_empty() {
            if !self.results.is_empty() {
                out.push('\n');
            }
            let status_w = self.checks.iter().map(|c| c.status.to_string().len()).max().unwrap_or(0);
            let name_w = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
            for c in &self.checks {
                let pad = name_w - c.name.chars().count();
                let _ = write!(out, "{:<status_w$}  {}{}  ", c.status.to_string(), c.name, " ".repeat(pad));
                match c.status {
                    Status::Skipped => {}
                    Status::Pass => {
                        let _ = write!(out, "{}", shorten(&c.actual));
                    }
                    _ => {
                        let _ = write!(out, "expected {}, got {}", shorten(&c.expected), shorten(&c.actual));
                    }
                }
                if let Some(n) = &c.note {
                    let _ = write!(out, "  ({n})");
                }
                out.push('\n');
            }
            let failed = self.checks.iter().filter(|c| c.status == Status::Fail).count();
            let _ = writeln!(out, "\n{} checks, {} failed", self.checks.len(), failed);
        }
        out
    }
}

fn shorten(s: &str) -> String {
    const MAX: usize = 80;
    if s.chars().count() <= MAX {
        s.to_string()
    } else {
        let head: String = s.chars().take(MAX).collect();
        format!("{head}… ({} chars)", s.chars().count())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statuses_and_json() {
        let mut r = RunReport::new(vec!["verify".into()]);
        r.result("tau", 5);
        assert!(r.compare("a", "x = y", 5, 5));
        r.push("b", "signs exist", "solvable", "infeasible", Status::ExpectedNegative, None);
        r.skip("c", "needs alpha", "no self-dual structure");
        assert!(r.all_pass());
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["checks"][1]["status"], "expected-negative");
        assert_eq!(v["checks"][1]["pass"], true);
        assert!(!r.compare("d", "x = y", 1, 2));
        assert!(!r.all_pass());
        assert!(r.render_table().contains("FAIL"));
    }

    #[test]
    fn digest_is_sha256() {
        assert_eq!(
            digest(b""),
            "sha256:e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
