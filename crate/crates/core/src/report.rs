//! Verification reports: one record per checked case, rendered as line
//! text or as a single JSON document.

use std::fmt::Write;
use std::time::Duration;

use serde::Serialize;

use crate::error::Error;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum CaseStatus {
    Pass,
    Fail { reason: String },
    Skip { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseRecord {
    pub check: String,
    pub parameters: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(flatten)]
    pub status: CaseStatus,
}

impl CaseRecord {
    /// Passes exactly when `lhs == rhs`.
    pub fn compare(check: &str, parameters: String, lhs: &Rational, rhs: &Rational) -> Self {
        let status = if lhs == rhs {
            CaseStatus::Pass
        } else {
            CaseStatus::Fail {
                reason: "sides differ".into(),
            }
        };
        CaseRecord {
            check: check.into(),
            parameters,
            lhs: Some(lhs.to_string()),
            rhs: Some(rhs.to_string()),
            status,
        }
    }

    pub fn flag(check: &str, parameters: String, ok: bool, reason: &str) -> Self {
        let status = if ok {
            CaseStatus::Pass
        } else {
            CaseStatus::Fail { reason: reason.into() }
        };
        CaseRecord {
            check: check.into(),
            parameters,
            lhs: None,
            rhs: None,
            status,
        }
    }

    pub fn skip(check: &str, parameters: String, reason: String) -> Self {
        CaseRecord {
            check: check.into(),
            parameters,
            lhs: None,
            rhs: None,
            status: CaseStatus::Skip { reason },
        }
    }

    /// Pole and size-guard errors become skips; anything else is a failure.
    pub fn from_error(check: &str, parameters: String, err: &Error) -> Self {
        match err {
            Error::Pole { .. } | Error::TooLarge(_) => Self::skip(check, parameters, err.to_string()),
            _ => CaseRecord {
                check: check.into(),
                parameters,
                lhs: None,
                rhs: None,
                status: CaseStatus::Fail { reason: err.to_string() },
            },
        }
    }

    /// `compare` on success, `from_error` otherwise.
    pub fn from_pair(check: &str, parameters: String, result: crate::Result<(Rational, Rational)>) -> Self {
        match result {
            Ok((lhs, rhs)) => Self::compare(check, parameters, &lhs, &rhs),
            Err(e) => Self::from_error(check, parameters, &e),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub cases: Vec<CaseRecord>,
    pub wall_time: Duration,
}

#[derive(Serialize)]
struct StructuredReport<'a> {
    suite: &'a str,
    seed: u64,
    totals: Totals,
    success: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_seconds: Option<f64>,
    cases: &'a [CaseRecord],
}

impl VerificationReport {
    pub fn totals(&self) -> Totals {
        let mut t = Totals::default();
        for c in &self.cases {
            match c.status {
                CaseStatus::Pass => t.passed += 1,
                CaseStatus::Fail { .. } => t.failed += 1,
                CaseStatus::Skip { .. } => t.skipped += 1,
            }
        }
        t
    }

    pub fn success(&self) -> bool {
        self.totals().failed == 0
    }

    /// Line-oriented report. Wall time is included only with `timing`, so
    /// reruns with the same arguments produce identical output.
    pub fn render_text(&self, timing: bool) -> String {
        let mut out = String::new();
        writeln!(out, "suite {}", self.suite).unwrap();
        writeln!(out, "seed {}", self.seed).unwrap();
        for c in &self.cases {
            write!(out, "{} [{}]", c.check, c.parameters).unwrap();
            if let (Some(l), Some(r)) = (&c.lhs, &c.rhs) {
                write!(out, " lhs={l} rhs={r}").unwrap();
            }
            match &c.status {
                CaseStatus::Pass => writeln!(out, " pass"),
                CaseStatus::Fail { reason } => writeln!(out, " FAIL: {reason}"),
                CaseStatus::Skip { reason } => writeln!(out, " skip: {reason}"),
            }
            .unwrap();
        }
        let t = self.totals();
        writeln!(
            out,
            "totals passed={} failed={} skipped={}",
            t.passed, t.failed, t.skipped
        )
        .unwrap();
        if timing {
            writeln!(out, "wall-time {:.3}s", self.wall_time.as_secs_f64()).unwrap();
        }
        writeln!(out, "result {}", if self.success() { "PASS" } else { "FAIL" }).unwrap();
        out
    }

    pub fn render_structured(&self, timing: bool) -> String {
        let doc = StructuredReport {
            suite: &self.suite,
            seed: self.seed,
            totals: self.totals(),
            success: self.success(),
            wall_time_seconds: timing.then_some(self.wall_time.as_secs_f64()),
            cases: &self.cases,
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
        s.push('\n');
        s
    }
}
