//! Structured pass/fail records for identity sweeps.

use serde::{Deserialize, Serialize};

/// Maximum number of failing cases kept verbatim per check.
pub const MAX_SAMPLES: usize = 8;

/// One identity checked over a family of cases.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub cases: u64,
    pub failures: u64,
    pub max_residual: f64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failure_samples: Vec<String>,
}

impl IdentityCheck {
    pub fn new(identity: impl Into<String>) -> Self {
        Self {
            identity: identity.into(),
            cases: 0,
            failures: 0,
            max_residual: 0.0,
            failure_samples: Vec::new(),
        }
    }

    /// Records one case. `describe` is only evaluated on failure.
    pub fn record(&mut self, passed: bool, residual: f64, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if residual > self.max_residual || residual.is_nan() {
            self.max_residual = residual;
        }
        if !passed {
            self.failures += 1;
            if self.failure_samples.len() < MAX_SAMPLES {
                self.failure_samples.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Result of a verification suite: per-identity checks plus totals.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub cases: u64,
    pub failures: u64,
    pub max_residual: f64,
    pub checks: Vec<IdentityCheck>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, exact: bool) -> Self {
        Self {
            suite: suite.into(),
            mode: if exact { "exact" } else { "float" }.to_string(),
            seed: None,
            cases: 0,
            failures: 0,
            max_residual: 0.0,
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn push(&mut self, check: IdentityCheck) {
        self.cases += check.cases;
        self.failures += check.failures;
        if check.max_residual > self.max_residual || check.max_residual.is_nan() {
            self.max_residual = check.max_residual;
        }
        self.checks.push(check);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn check(&self, identity: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.identity == identity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals_accumulate() {
        let mut a = IdentityCheck::new("a");
        a.record(true, 0.0, String::new);
        a.record(false, 2.0, || "bad".into());
        let mut b = IdentityCheck::new("b");
        b.record(true, 0.5, String::new);

        let mut r = VerificationReport::new("s", true);
        r.push(a);
        r.push(b);
        assert_eq!(r.cases, 3);
        assert_eq!(r.failures, 1);
        assert_eq!(r.max_residual, 2.0);
        assert!(!r.passed());
        assert_eq!(r.check("a").unwrap().failure_samples, vec!["bad"]);
    }

    #[test]
    fn samples_are_capped() {
        let mut c = IdentityCheck::new("x");
        for _ in 0..100 {
            c.record(false, 1.0, || "f".into());
        }
        assert_eq!(c.failures, 100);
        assert_eq!(c.failure_samples.len(), MAX_SAMPLES);
    }
}
