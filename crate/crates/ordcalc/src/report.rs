//! Structured verification reports and their JSON form.

use serde::Serialize;
use serde_json::{json, Value};

use ordcore::enumerate::Fingerprint;
use ordcore::GroupParams;

/// Outcome of a check. `Fail` always comes with witnesses; `Inconclusive`
/// means the configured search was exhausted without a decision;
/// `NotApplicable` means a hypothesis of the underlying statement is violated
/// by the chosen parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "inconclusive")]
    Inconclusive,
    #[serde(rename = "not-applicable")]
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
            Verdict::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub items: u64,
    pub millis: u64,
}

/// One check's structured result.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub check: String,
    pub m: u32,
    pub n: u32,
    pub config: Value,
    pub seed: u64,
    pub verdict: Verdict,
    pub witnesses: Vec<Value>,
    pub stats: Stats,
}

impl Report {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serialization")
    }

    /// One-line text summary. Wall-clock time is reported only in the JSON
    /// form so that text output is byte-identical across runs.
    pub fn summary_line(&self) -> String {
        let mut line = format!(
            "{} (m,n)=({},{}): {} [items={}]",
            self.check,
            self.m,
            self.n,
            self.verdict.as_str(),
            self.stats.items
        );
        if self.verdict != Verdict::Pass {
            if let Some(w) = self.witnesses.first() {
                line.push_str(&format!(" witness={w}"));
            }
        }
        line
    }
}

/// Builder used by the checks.
pub fn report(
    check: &str,
    params: &GroupParams,
    config: Value,
    seed: u64,
    verdict: Verdict,
    witnesses: Vec<Value>,
    items: u64,
    millis: u64,
) -> Report {
    Report {
        check: check.to_string(),
        m: params.m(),
        n: params.n(),
        config,
        seed,
        verdict,
        witnesses,
        stats: Stats { items, millis },
    }
}

/// The serialized form of a fingerprint:
/// `{"spec": ..., "radius": ..., "signs": {"<canonical form>": "+|0|-"}}`.
pub fn fingerprint_json(fp: &Fingerprint) -> Value {
    let signs: serde_json::Map<String, Value> = fp
        .signs
        .iter()
        .map(|(k, v)| (k.clone(), Value::String(v.symbol().to_string())))
        .collect();
    json!({
        "spec": fp.spec,
        "radius": fp.radius,
        "signs": Value::Object(signs),
    })
}
