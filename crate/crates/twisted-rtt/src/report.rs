//! Check results and reports.
//!
//! Every verification routine returns a list of [`Check`]s with stable ids
//! such as `ybe.n2` or `gauss.eiprei.i1`.  A [`Report`] sorts them by id so
//! that its JSON serialization is byte-for-byte reproducible.

use serde::Serialize;
use std::fmt;

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// One verified statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Check {
    pub fn pass(id: impl Into<String>, detail: impl Into<String>) -> Check {
        Check { id: id.into(), status: Status::Pass, detail: detail.into(), counterexample: None }
    }

    pub fn fail(id: impl Into<String>, detail: impl Into<String>, counterexample: impl Into<String>) -> Check {
        Check { id: id.into(), status: Status::Fail, detail: detail.into(), counterexample: Some(counterexample.into()) }
    }

    pub fn skipped(id: impl Into<String>, reason: impl Into<String>) -> Check {
        Check { id: id.into(), status: Status::Skipped, detail: reason.into(), counterexample: None }
    }

    /// Pass if `ok`, otherwise fail with the given counterexample.
    pub fn from_outcome(id: impl Into<String>, detail: impl Into<String>, ok: bool, cx: impl FnOnce() -> String) -> Check {
        if ok {
            Check::pass(id, detail)
        } else {
            Check::fail(id, detail, cx())
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Aggregated result of a run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub params: serde_json::Value,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl Report {
    pub fn new(suite: impl Into<String>, params: serde_json::Value, mut checks: Vec<Check>) -> Report {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        Report { suite: suite.into(), params, checks, wall_time_ms: None }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// Finds a check by id.
    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checks_are_sorted() {
        let r = Report::new(
            "x",
            serde_json::json!({}),
            vec![Check::pass("b", ""), Check::fail("a", "", "u=2"), Check::skipped("c", "why")],
        );
        let ids: Vec<&str> = r.checks.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids, ["a", "b", "c"]);
        assert!(!r.all_passed());
        assert!(r.to_json().contains("\"status\": \"fail\""));
    }
}
