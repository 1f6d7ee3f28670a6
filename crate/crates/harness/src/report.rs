use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One JSON document per suite run. Everything except `elapsed_ms` is a
/// function of the claim, its configuration and the seed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub claim: String,
    pub anchor: String,
    pub config: Value,
    pub instances: Vec<Instance>,
    pub summary: Summary,
    pub seed: u64,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    /// graph6 for graphs, digraph6 for digraphs.
    pub graph6: String,
    pub params: Value,
    pub measured: Value,
    pub expected: Value,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub pass: bool,
    /// Reported quantities that are not pass/fail conditions.
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub observations: Value,
}

impl Summary {
    pub fn of(instances: &[Instance], observations: Value) -> Summary {
        let passed = instances.iter().filter(|i| i.pass).count();
        Summary {
            instances: instances.len(),
            passed,
            failed: instances.len() - passed,
            pass: passed == instances.len(),
            observations,
        }
    }
}

impl Report {
    pub fn pass(&self) -> bool {
        self.summary.pass
    }

    /// The report with `elapsed_ms` zeroed, for determinism comparisons.
    pub fn without_timing(&self) -> Report {
        Report {
            elapsed_ms: 0,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}
