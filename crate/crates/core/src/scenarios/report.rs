//! Structured pass/fail reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use crate::Verdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    /// The check's hypotheses do not hold for the given input; not a failure.
    PreconditionUnmet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub outcome: Outcome,
    pub block: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScenarioReport {
    pub name: String,
    pub parameters: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    /// Wall time; kept out of the deterministic outputs unless requested.
    #[serde(skip)]
    pub runtime: Duration,
}

impl ScenarioReport {
    pub fn new(name: impl Into<String>) -> Self {
        ScenarioReport { name: name.into(), parameters: BTreeMap::new(), checks: Vec::new(), runtime: Duration::ZERO }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn record(&mut self, label: impl Into<String>, holds: bool, block: Option<String>) {
        let outcome = if holds { Outcome::Pass } else { Outcome::Fail };
        self.checks.push(Check { label: label.into(), outcome, block: if holds { None } else { block } });
    }

    pub fn check(&mut self, label: impl Into<String>, holds: bool) {
        self.record(label, holds, None);
    }

    pub fn verdict(&mut self, label: impl Into<String>, v: &Verdict) {
        self.record(label, v.holds, v.witness.as_ref().map(|w| format!("{w:?}")));
    }

    pub fn precondition_unmet(&mut self, label: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check { label: label.into(), outcome: Outcome::PreconditionUnmet, block: Some(detail.into()) });
    }

    /// Records an error from a step as a failed check.
    pub fn record_result<T, E: std::fmt::Display>(&mut self, label: &str, r: Result<T, E>) -> Option<T> {
        match r {
            Ok(x) => Some(x),
            Err(e) => {
                self.record(label, false, Some(e.to_string()));
                None
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome != Outcome::Fail)
    }

    pub fn has_unmet_precondition(&self) -> bool {
        self.checks.iter().any(|c| c.outcome == Outcome::PreconditionUnmet)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.outcome == Outcome::Fail).collect()
    }

    /// One `LABEL: PASS|FAIL [block]` line per check.
    pub fn lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = match c.outcome {
                Outcome::Pass => "PASS",
                Outcome::Fail => "FAIL",
                Outcome::PreconditionUnmet => "PRECONDITION-UNMET",
            };
            let _ = match &c.block {
                Some(b) => writeln!(out, "{}: {status} {b}", c.label),
                None => writeln!(out, "{}: {status}", c.label),
            };
        }
        out
    }

    /// Machine summary; `runtime_ms` is null unless timing is requested.
    pub fn to_json(&self, with_timing: bool) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("serialisable");
        let runtime = if with_timing { serde_json::json!(self.runtime.as_millis() as u64) } else { serde_json::Value::Null };
        v["runtime_ms"] = runtime;
        v["passed"] = serde_json::json!(self.passed());
        v
    }
}
