//! Check results and the run report, with a canonical JSON form.
//!
//! The canonical document has sorted keys, two-space indentation and only
//! integer numbers. Its hash is taken with every `runtime_ms` set to zero, so
//! two runs with the same flags and seeds hash identically.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub citation: String,
    pub runtime_ms: u64,
    /// Extra context: raw values behind a bound check, skip reasons.
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl CheckResult {
    /// Pass iff `expected == actual`.
    pub fn compare(
        id: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
        citation: &str,
    ) -> Self {
        let expected = expected.to_string();
        let actual = actual.to_string();
        let status = if expected == actual {
            Status::Pass
        } else {
            Status::Fail
        };
        CheckResult {
            check_id: id.into(),
            status,
            expected,
            actual,
            citation: citation.to_string(),
            runtime_ms: 0,
            detail: String::new(),
        }
    }

    /// Not judged; `reason` goes into `detail`.
    pub fn skipped(
        id: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
        citation: &str,
        reason: impl Into<String>,
    ) -> Self {
        let mut c = Self::compare(id, expected, actual, citation);
        c.status = Status::Skipped;
        c.detail = reason.into();
        c
    }

    /// Downgrades a mismatch from fail to skipped.
    pub fn soft(mut self, reason: impl Into<String>) -> Self {
        if self.status == Status::Fail {
            self.status = Status::Skipped;
            self.detail = reason.into();
        }
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    pub fn with_runtime(mut self, ms: u64) -> Self {
        self.runtime_ms = ms;
        self
    }
}

/// Runs `f` and returns its value with the elapsed wall-clock milliseconds.
pub fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_millis() as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub tool_version: String,
    pub command: String,
    pub seeds: Vec<u64>,
    pub checks: Vec<CheckResult>,
    pub overall: Status,
}

impl RunReport {
    pub fn new(command: impl Into<String>, seeds: Vec<u64>) -> Self {
        RunReport {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into(),
            seeds,
            checks: Vec::new(),
            overall: Status::Pass,
        }
    }

    pub fn push(&mut self, check: CheckResult) {
        if check.status == Status::Fail {
            self.overall = Status::Fail;
        }
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = CheckResult>) {
        for c in checks {
            self.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check_id == id)
    }

    /// Canonical JSON with every timing set to zero.
    pub fn masked_json(&self) -> String {
        let mut masked = self.clone();
        for c in &mut masked.checks {
            c.runtime_ms = 0;
        }
        render(&to_canonical(&masked))
    }

    /// SHA-256 of [`RunReport::masked_json`].
    pub fn canonical_hash(&self) -> String {
        hex::encode(Sha256::digest(self.masked_json().as_bytes()))
    }

    /// The machine-readable report: canonical JSON with real timings and
    /// the masked hash under `canonical_sha256`.
    pub fn to_json(&self) -> String {
        let mut value = to_canonical(self);
        if let Value::Object(map) = &mut value {
            map.insert(
                "canonical_sha256".into(),
                Value::String(self.canonical_hash()),
            );
        }
        render(&sorted(value))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let seeds = if self.seeds.is_empty() {
            "none".to_string()
        } else {
            self.seeds
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        let _ = writeln!(out, "e6check {}", self.tool_version);
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "seeds: {seeds}");
        for c in &self.checks {
            let _ = writeln!(
                out,
                "[{}] {}: expected {}, actual {} ({} ms)",
                c.status.label(),
                c.check_id,
                c.expected,
                c.actual,
                c.runtime_ms
            );
            if !c.detail.is_empty() {
                let _ = writeln!(out, "       {}", c.detail);
            }
            let _ = writeln!(out, "       cite: {}", c.citation);
        }
        let _ = writeln!(
            out,
            "overall: {} ({} passed, {} failed, {} skipped)",
            self.overall.label(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        );
        let _ = writeln!(out, "canonical sha256: {}", self.canonical_hash());
        out
    }
}

fn to_canonical(report: &RunReport) -> Value {
    sorted(serde_json::to_value(report).expect("report serializes"))
}

/// Rebuilds every object with its keys in sorted order, whatever map type
/// `serde_json` was compiled with.
fn sorted(value: Value) -> Value {
    match value {
        Value::Object(map) => {
            let mut entries: Vec<(String, Value)> = map.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            Value::Object(
                entries
                    .into_iter()
                    .map(|(k, v)| (k, sorted(v)))
                    .collect::<Map<_, _>>(),
            )
        }
        Value::Array(items) => Value::Array(items.into_iter().map(sorted).collect()),
        other => other,
    }
}

fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json renders");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> RunReport {
        let mut r = RunReport::new("e6check demo", vec![7]);
        r.push(CheckResult::compare("a.rank", 50, 50, "rank 50").with_runtime(12));
        r.push(CheckResult::skipped(
            "a.smooth",
            "smooth",
            "singular",
            "smoothness",
            "cone",
        ));
        r
    }

    #[test]
    fn overall_tracks_failures() {
        let mut r = sample();
        assert!(r.passed());
        r.push(CheckResult::compare("a.sum", 27, 26, "sum"));
        assert_eq!(r.overall, Status::Fail);
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn soft_only_downgrades_failures() {
        let c = CheckResult::compare("x", 50, 49, "c").soft("rank drop");
        assert_eq!(c.status, Status::Skipped);
        assert_eq!(c.detail, "rank drop");
        assert_eq!(
            CheckResult::compare("x", 1, 1, "c").soft("r").status,
            Status::Pass
        );
    }

    #[test]
    fn keys_are_sorted() {
        let json = sample().to_json();
        let v: Value = serde_json::from_str(&json).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        let mut sorted_keys = keys.clone();
        sorted_keys.sort();
        assert_eq!(keys, sorted_keys);
        let first = json.find("\"canonical_sha256\"").unwrap();
        assert!(first < json.find("\"checks\"").unwrap());
        assert!(json.find("\"actual\"").unwrap() < json.find("\"check_id\"").unwrap());
    }

    #[test]
    fn hash_ignores_timings() {
        let a = sample();
        let mut b = sample();
        b.checks[0].runtime_ms = 9999;
        assert_eq!(a.canonical_hash(), b.canonical_hash());
        assert_ne!(a.to_json(), b.to_json());
        b.checks[0].actual = "49".into();
        assert_ne!(a.canonical_hash(), b.canonical_hash());
    }

    #[test]
    fn detail_omitted_when_empty() {
        let json = sample().to_json();
        assert_eq!(json.matches("\"detail\"").count(), 1);
    }
}
