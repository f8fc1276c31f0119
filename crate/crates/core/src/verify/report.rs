//! Structured check outcomes and their renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::graph6::to_graph6_string;
use crate::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable { reason: String },
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable { .. } => "n/a",
        }
    }
}

/// Outcome of one check on one graph. `witness` is present iff the verdict
/// is [`Verdict::Fail`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub claim: String,
    pub graph: String,
    pub graph6: String,
    pub params: Map<String, Value>,
    pub lhs: Value,
    pub rhs: Value,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Map::is_empty", default)]
    pub details: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<f64>,
}

impl VerdictReport {
    pub(crate) fn new(claim: &str, g: &Graph) -> Self {
        VerdictReport {
            claim: claim.to_string(),
            graph: g.name().unwrap_or("unnamed").to_string(),
            graph6: to_graph6_string(g),
            params: Map::new(),
            lhs: Value::Null,
            rhs: Value::Null,
            verdict: Verdict::Pass,
            witness: None,
            details: Map::new(),
            elapsed_ms: None,
        }
    }

    pub(crate) fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub(crate) fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.to_string(), value.into());
    }

    pub(crate) fn not_applicable(mut self, reason: impl Into<String>) -> Self {
        self.verdict = Verdict::NotApplicable { reason: reason.into() };
        self.witness = None;
        self
    }

    /// Sets both sides and derives the verdict from their equality. A failing
    /// report gets `witness`, or both sides when none is given.
    pub(crate) fn decide(mut self, lhs: Value, rhs: Value, witness: Option<Value>) -> Self {
        let pass = lhs == rhs;
        self.witness = (!pass).then(|| witness.unwrap_or_else(|| serde_json::json!({ "lhs": lhs, "rhs": rhs })));
        self.lhs = lhs;
        self.rhs = rhs;
        self.verdict = if pass { Verdict::Pass } else { Verdict::Fail };
        self
    }

    pub fn is_pass(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// One JSON object per line.
pub fn to_records(reports: &[VerdictReport]) -> String {
    reports.iter().map(|r| r.to_json_line() + "\n").collect()
}

/// Counts of (pass, fail, not applicable).
pub fn tally(reports: &[VerdictReport]) -> (usize, usize, usize) {
    reports.iter().fold((0, 0, 0), |(p, f, n), r| match r.verdict {
        Verdict::Pass => (p + 1, f, n),
        Verdict::Fail => (p, f + 1, n),
        Verdict::NotApplicable { .. } => (p, f, n + 1),
    })
}

fn compact(v: &Value) -> String {
    match v {
        Value::Null => "-".to_string(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn params_cell(r: &VerdictReport) -> String {
    r.params.iter().map(|(k, v)| format!("{k}={}", compact(v))).collect::<Vec<_>>().join(" ")
}

/// Aligned human-readable table followed by a summary line.
pub fn format_table(reports: &[VerdictReport]) -> String {
    let header = ["graph", "claim", "params", "verdict", "lhs", "rhs", "note"];
    let rows: Vec<[String; 7]> = reports
        .iter()
        .map(|r| {
            let note = match &r.verdict {
                Verdict::NotApplicable { reason } => reason.clone(),
                Verdict::Fail => r.witness.as_ref().map(compact).unwrap_or_default(),
                Verdict::Pass => String::new(),
            };
            let clip = |s: String| if s.chars().count() > 48 { s.chars().take(45).collect::<String>() + "..." } else { s };
            [
                r.graph.clone(),
                r.claim.clone(),
                params_cell(r),
                r.verdict.label().to_string(),
                clip(compact(&r.lhs)),
                clip(compact(&r.rhs)),
                clip(note),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[&str]| {
        let padded: Vec<String> = cells.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(&header);
    for row in &rows {
        line(&row.iter().map(String::as_str).collect::<Vec<_>>());
    }
    let (p, f, n) = tally(reports);
    let _ = writeln!(out, "{} checks: {p} pass, {f} fail, {n} not applicable", reports.len());
    out
}
