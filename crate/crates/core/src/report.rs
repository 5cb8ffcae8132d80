//! Pass/fail records for sampled and structural checks.

use serde::Serialize;
use serde_json::Value;

/// Outcome of one named check over some number of trials.
///
/// A failed check always carries the first counterexample seen.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub trials: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measured: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl CheckResult {
    pub fn new(name: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed: true,
            trials: 0,
            failures: 0,
            measured: None,
            counterexample: None,
        }
    }

    /// Records one trial; `witness` is only built for the first failure.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.trials += 1;
        if !ok {
            self.failures += 1;
            self.passed = false;
            if self.counterexample.is_none() {
                self.counterexample = Some(witness());
            }
        }
    }

    pub fn with_measured(mut self, measured: Value) -> Self {
        self.measured = Some(measured);
        self
    }

    pub fn merge(&mut self, other: CheckResult) {
        self.trials += other.trials;
        self.failures += other.failures;
        self.passed &= other.passed;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn first_failure_is_kept() {
        let mut c = CheckResult::new("demo");
        c.record(true, || json!(0));
        c.record(false, || json!(1));
        c.record(false, || json!(2));
        assert!(!c.passed);
        assert_eq!((c.trials, c.failures), (3, 2));
        assert_eq!(c.counterexample, Some(json!(1)));
    }
}
