//! Machine-readable certification reports.
//!
//! A report collects everything a third party needs to replay a run: the
//! command line, digests of file inputs, the field and seed, and one verdict
//! per check with optional witness data. Re-running with the same seed
//! reproduces the report byte-for-byte except for the `volatile` section,
//! which holds wall-clock timings and is excluded from that guarantee.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// A sampling-based check that found no counterexample.
    Probabilistic,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Volatile {
    pub timings_ms: BTreeMap<String, u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub p: u64,
    pub seed: u64,
    pub verdicts: Vec<Verdict>,
    pub volatile: Volatile,
}

impl Report {
    pub fn new(command: impl Into<String>, p: u64, seed: u64) -> Self {
        Report {
            command: command.into(),
            inputs: BTreeMap::new(),
            p,
            seed,
            verdicts: Vec::new(),
            volatile: Volatile::default(),
        }
    }

    pub fn input(&mut self, name: impl Into<String>, bytes: &[u8]) {
        let mut hasher = Sha256::new();
        hasher.update(bytes);
        self.inputs.insert(name.into(), format!("sha256:{:x}", hasher.finalize()));
    }

    pub fn parameter(&mut self, name: impl Into<String>, value: impl ToString) {
        self.inputs.insert(name.into(), value.to_string());
    }

    pub fn pass(&mut self, check: impl Into<String>, detail: impl Into<String>) {
        self.verdicts.push(Verdict {
            check: check.into(),
            status: Status::Pass,
            detail: detail.into(),
            witness: None,
        });
    }

    pub fn fail(
        &mut self,
        check: impl Into<String>,
        detail: impl Into<String>,
        witness: Option<serde_json::Value>,
    ) {
        self.verdicts.push(Verdict {
            check: check.into(),
            status: Status::Fail,
            detail: detail.into(),
            witness,
        });
    }

    pub fn probabilistic(&mut self, check: impl Into<String>, detail: impl Into<String>) {
        self.verdicts.push(Verdict {
            check: check.into(),
            status: Status::Probabilistic,
            detail: detail.into(),
            witness: None,
        });
    }

    pub fn timing(&mut self, name: impl Into<String>, millis: u64) {
        self.volatile.timings_ms.insert(name.into(), millis);
    }

    /// All checks passed (probabilistic verdicts count as passing).
    pub fn all_passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.status != Status::Fail)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_reproduce_modulo_volatile() {
        let build = |ms: u64| {
            let mut r = Report::new("indecomp check", 101, 7);
            r.parameter("d", 3);
            r.input("rep", b"same bytes");
            r.pass("validate", "all relations hold");
            r.probabilistic("fitting", "32 trials, no idempotent");
            r.timing("total", ms);
            r
        };
        let mut a = build(10);
        let mut b = build(999);
        assert!(a.all_passed());
        a.volatile = Volatile::default();
        b.volatile = Volatile::default();
        assert_eq!(a.to_json_pretty(), b.to_json_pretty());
    }

    #[test]
    fn fail_flips_the_outcome() {
        let mut r = Report::new("x", 2, 0);
        r.pass("a", "ok");
        r.fail("b", "broken", Some(serde_json::json!({"relation": 1})));
        assert!(!r.all_passed());
    }
}
