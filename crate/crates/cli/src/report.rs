use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    /// Which identity was checked.
    pub identity: String,
    pub inputs: String,
    pub passed: bool,
    /// Exact values involved, recorded on failure.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, checks: Vec<CheckRecord>) -> VerificationReport {
        let failed = checks.iter().filter(|c| !c.passed).count();
        let summary = Summary { total: checks.len(), passed: checks.len() - failed, failed };
        VerificationReport { suite: suite.into(), checks, summary }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Per-identity counts followed by every failure.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mut groups: Vec<(&str, usize, usize)> = Vec::new();
        for c in &self.checks {
            match groups.iter_mut().find(|(id, _, _)| *id == c.identity) {
                Some(entry) => {
                    entry.1 += 1;
                    entry.2 += usize::from(!c.passed);
                }
                None => groups.push((&c.identity, 1, usize::from(!c.passed))),
            }
        }
        let _ = writeln!(out, "suite {}", self.suite);
        for (id, n, bad) in groups {
            let _ = writeln!(out, "  {:<4} {id}: {} of {n}", if bad == 0 { "ok" } else { "FAIL" }, n - bad);
        }
        for c in self.failures() {
            let _ = writeln!(out, "  failed: {} [{}] {}", c.identity, c.inputs, c.detail.as_deref().unwrap_or(""));
        }
        let _ = writeln!(
            out,
            "{}: {} checks, {} passed, {} failed",
            if self.passed() { "PASS" } else { "FAIL" },
            self.summary.total,
            self.summary.passed,
            self.summary.failed
        );
        out
    }
}

/// Accumulates check records.
#[derive(Default)]
pub struct Recorder {
    pub checks: Vec<CheckRecord>,
}

impl Recorder {
    pub fn check(&mut self, identity: &str, inputs: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.checks.push(CheckRecord {
            identity: identity.to_string(),
            inputs: inputs.to_string(),
            passed: ok,
            detail: (!ok).then(detail),
        });
    }

    /// Records a computation that must not fail.
    pub fn attempt<T, E: std::fmt::Display>(&mut self, identity: &str, inputs: &str, r: Result<T, E>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(identity, inputs, false, || e.to_string());
                None
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut r = Recorder::default();
        r.check("a", "x", true, String::new);
        r.check("b", "y", false, || "1 != 2".into());
        let report = VerificationReport::new("demo", r.checks);
        assert!(!report.passed());
        assert_eq!(report.summary, Summary { total: 2, passed: 1, failed: 1 });
        let text = serde_json::to_string(&report).unwrap();
        let back: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert!(report.render_text().contains("failed: b [y] 1 != 2"));
    }
}
