//! Pass/fail reports for identity checks, with both sides of every failed
//! identity retained for debugging. Serializes to the stable JSON shape
//! `{name, params, pass, failures: [{identity, lhs, rhs}]}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub identity: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    name: String,
    params: BTreeMap<String, String>,
    pass: bool,
    failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            params: BTreeMap::new(),
            pass: true,
            failures: Vec::new(),
        }
    }

    pub fn with_param(mut self, key: impl Into<String>, value: impl fmt::Display) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn params(&self) -> &BTreeMap<String, String> {
        &self.params
    }

    pub fn pass(&self) -> bool {
        debug_assert_eq!(self.pass, self.failures.is_empty());
        self.pass
    }

    pub fn failures(&self) -> &[Failure] {
        &self.failures
    }

    /// Records an equality check; a mismatch stores both sides.
    pub fn check_eq<T: PartialEq + fmt::Display>(
        &mut self,
        identity: impl Into<String>,
        lhs: &T,
        rhs: &T,
    ) {
        if lhs != rhs {
            self.fail(identity, lhs, rhs);
        }
    }

    /// Records a predicate check; `lhs`/`rhs` describe the two sides.
    pub fn check(
        &mut self,
        identity: impl Into<String>,
        ok: bool,
        lhs: impl fmt::Display,
        rhs: impl fmt::Display,
    ) {
        if !ok {
            self.fail(identity, lhs, rhs);
        }
    }

    fn fail(
        &mut self,
        identity: impl Into<String>,
        lhs: impl fmt::Display,
        rhs: impl fmt::Display,
    ) {
        self.pass = false;
        self.failures.push(Failure {
            identity: identity.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Folds another report in, prefixing its failures with its name.
    pub fn absorb(&mut self, other: VerificationReport) {
        if !other.pass {
            self.pass = false;
        }
        for f in other.failures {
            self.failures.push(Failure {
                identity: format!("{}: {}", other.name, f.identity),
                lhs: f.lhs,
                rhs: f.rhs,
            });
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.name)?;
        if !self.params.is_empty() {
            let params: Vec<String> = self
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            write!(f, " ({})", params.join(", "))?;
        }
        for failure in &self.failures {
            write!(
                f,
                "\n  {}: lhs = {}, rhs = {}",
                failure.identity, failure.lhs, failure.rhs
            )?;
        }
        Ok(())
    }
}
