use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub claim: String,
    pub anchor: String,
    pub status: Status,
    pub witness: BTreeMap<String, String>,
}

/// Result of one invocation: parameters, checks and computed data.
///
/// Serialized with sorted keys (serde_json's default map is ordered), big
/// integers as decimal strings, and nothing time-dependent.
#[derive(Debug, Clone)]
pub struct Report {
    pub suite: String,
    pub type_label: Option<String>,
    pub parameters: Map<String, Value>,
    pub checks: Vec<Check>,
    pub data: Map<String, Value>,
}

impl Report {
    pub fn new(suite: &str, type_label: Option<String>) -> Self {
        Report {
            suite: suite.to_string(),
            type_label,
            parameters: Map::new(),
            checks: Vec::new(),
            data: Map::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn data(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.data.insert(key.to_string(), value.into());
        self
    }

    pub fn check<I, K, V>(&mut self, claim: &str, anchor: &str, ok: bool, witness: I) -> bool
    where
        I: IntoIterator<Item = (K, V)>,
        K: Into<String>,
        V: ToString,
    {
        self.push(claim, anchor, if ok { Status::Pass } else { Status::Fail }, witness);
        ok
    }

    pub fn skip(&mut self, claim: &str, anchor: &str, reason: &str) {
        self.push(claim, anchor, Status::Skipped, [("reason", reason)]);
    }

    fn push<I, K, V>(&mut self, claim: &str, anchor: &str, status: Status, witness: I)
    where
        I: IntoIterator<Item = (K, V)>,
        K: Into<String>,
        V: ToString,
    {
        self.checks.push(Check {
            claim: claim.to_string(),
            anchor: anchor.to_string(),
            status,
            witness: witness.into_iter().map(|(k, v)| (k.into(), v.to_string())).collect(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_value(&self) -> Value {
        json!({
            "suite": self.suite,
            "type": self.type_label,
            "parameters": self.parameters,
            "checks": self.checks,
            "data": self.data,
            "status": if self.passed() { "pass" } else { "fail" },
        })
    }

    /// Canonical document: pretty JSON, sorted keys, trailing newline.
    pub fn to_canonical(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("report is valid JSON");
        s.push('\n');
        s
    }

    /// Human-readable table of the checks.
    pub fn to_summary(&self) -> String {
        let mut out = String::new();
        let ty = self.type_label.as_deref().unwrap_or("-");
        let overall = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "{} [{ty}] {overall}", self.suite).unwrap();
        let width = self.checks.iter().map(|c| c.claim.len()).max().unwrap_or(0);
        for c in &self.checks {
            let w: Vec<String> = c.witness.iter().map(|(k, v)| format!("{k}={v}")).collect();
            writeln!(
                out,
                "  {:<7} {:<width$}  {}",
                c.status.as_str(),
                c.claim,
                w.join(" ")
            )
            .unwrap();
        }
        if self.checks.is_empty() {
            writeln!(out, "  (no checks; data only)").unwrap();
        }
        out
    }
}

/// Decimal-string array.
pub fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(|x| Value::String(x.to_string())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_output_is_sorted_and_stable() {
        let mut r = Report::new("demo", Some("A1".into()));
        r.param("zeta", 1).param("alpha", 2);
        r.check("c", "anchor", true, [("b", 2), ("a", 1)]);
        let s = r.to_canonical();
        assert!(s.ends_with("}\n"));
        assert!(s.find("\"alpha\"").unwrap() < s.find("\"zeta\"").unwrap());
        assert!(s.find("\"checks\"").unwrap() < s.find("\"suite\"").unwrap());
        assert_eq!(s, r.to_canonical());
        r.skip("d", "anchor", "n/a");
        assert!(r.passed());
        r.check("e", "anchor", false, Vec::<(String, String)>::new());
        assert!(!r.passed());
        assert!(r.to_summary().starts_with("demo [A1] FAIL"));
    }
}
