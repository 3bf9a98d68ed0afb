use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;
use triangle_verify::conditions::ConditionReport;
use triangle_verify::properties::{PropertyReport, Verdict};
use triangle_verify::transforms::PreservationReport;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Overall outcome of one entry, ordered by exit-code precedence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Inapplicable,
    Fails,
}

impl Status {
    fn of(v: Verdict) -> Self {
        match v {
            Verdict::HoldsOnRange => Status::Holds,
            Verdict::Inapplicable => Status::Inapplicable,
            Verdict::Fails | Verdict::PreconditionFailed => Status::Fails,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Entry {
    pub check: String,
    pub status: Status,
    pub report: Value,
    #[serde(skip)]
    pub summary: String,
}

impl Entry {
    pub fn property(check: impl Into<String>, r: &PropertyReport) -> Self {
        Entry {
            check: check.into(),
            status: Status::of(r.verdict),
            report: to_value(r),
            summary: std::iter::once(r.to_string())
                .chain(r.notes.iter().cloned())
                .collect::<Vec<_>>()
                .join("; "),
        }
    }

    pub fn conditions(check: impl Into<String>, r: &ConditionReport) -> Self {
        let mut summary = String::from(if r.all_established() {
            "all conditions established"
        } else {
            "not all conditions established"
        });
        for c in &r.conditions {
            summary.push_str(&format!(
                "\n  ({}) {}",
                c.id,
                if c.established {
                    "established"
                } else {
                    "not established"
                }
            ));
            for cl in c.clauses.iter().filter(|cl| !cl.holds) {
                summary.push_str(&format!("\n      {} fails", cl.clause));
                if let Some(k) = cl.failing_k {
                    summary.push_str(&format!(" at k = {k}"));
                }
                if let (Some(l), Some(r)) = (&cl.lhs, &cl.rhs) {
                    summary.push_str(&format!(" ({l} < {r})"));
                }
            }
        }
        for (name, h) in &r.hypotheses {
            summary.push_str(&format!("\n  hypothesis {name}: {}", verdict_word(h)));
        }
        for n in &r.notes {
            summary.push_str(&format!("\n  note: {n}"));
        }
        Entry {
            check: check.into(),
            status: if r.all_established() {
                Status::Holds
            } else {
                Status::Fails
            },
            report: to_value(r),
            summary,
        }
    }

    pub fn preservation(check: impl Into<String>, r: &PreservationReport) -> Self {
        let mut summary = format!("input {}", r.precondition);
        if let Some(out) = &r.output {
            summary.push_str(&format!("; output {out}"));
        } else {
            summary.push_str("; transform not applied");
        }
        Entry {
            check: check.into(),
            status: Status::of(r.verdict),
            report: to_value(r),
            summary,
        }
    }
}

fn verdict_word(r: &PropertyReport) -> &'static str {
    if r.is_holds() {
        "holds"
    } else {
        "not established"
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub reports: Vec<Entry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub artifact: Option<String>,
    pub timing_ms: u128,
    pub version: &'static str,
}

impl RunReport {
    pub fn status(&self) -> Status {
        self.reports
            .iter()
            .map(|e| e.status)
            .max()
            .unwrap_or(Status::Holds)
    }

    pub fn exit_code(&self) -> i32 {
        match self.status() {
            Status::Holds => 0,
            Status::Fails => 1,
            Status::Inapplicable => 3,
        }
    }

    pub fn summary(&self) -> String {
        let mut out = format!("tverify {}", self.command);
        for e in &self.reports {
            let tag = match e.status {
                Status::Holds => "ok",
                Status::Inapplicable => "n/a",
                Status::Fails => "FAIL",
            };
            out.push_str(&format!("\n[{tag}] {}: {}", e.check, e.summary));
        }
        out
    }
}
