//! Ordered pass/fail reports shared by every validator and verifier.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First offending element on failure, or a short summary on success.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed: true, detail: None });
    }

    pub fn pass_with(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed: true, detail: Some(detail.into()) });
    }

    pub fn fail(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed: false, detail: Some(detail.into()) });
    }

    /// Records `name` as passed when `failure` is `None`.
    pub fn record(&mut self, name: impl Into<String>, failure: Option<String>) {
        match failure {
            None => self.pass(name),
            Some(d) => self.fail(name, d),
        }
    }

    /// Appends every check of `other`, prefixing names with `prefix/`.
    pub fn extend_prefixed(&mut self, prefix: &str, other: ValidationReport) {
        for mut c in other.checks {
            c.name = format!("{prefix}/{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "pass" } else { "FAIL" };
            match &c.detail {
                Some(d) => writeln!(f, "[{tag}] {}: {d}", c.name)?,
                None => writeln!(f, "[{tag}] {}", c.name)?,
            }
        }
        if self.all_passed() {
            write!(f, "all checks pass")
        } else {
            write!(f, "{} check(s) failed", self.failures().count())
        }
    }
}
