//! Pass/fail bookkeeping shared by every verification routine.

use serde::Serialize;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Basis coordinates (or grade/sample indices) of the first failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub context: String,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.push(name, None, "");
    }

    /// Records a check; `counterexample` of `None` means it passed.
    pub fn push(&mut self, name: impl Into<String>, counterexample: Option<Vec<usize>>, context: impl Into<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            passed: counterexample.is_none(),
            counterexample,
            context: context.into(),
        });
    }

    pub fn record(&mut self, name: impl Into<String>, ok: bool, context: impl Into<String>) {
        self.checks.push(CheckResult { name: name.into(), passed: ok, counterexample: None, context: context.into() });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// Same as `extend` but prefixes every check name.
    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}/{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// First index tuple for which `ok` fails, scanning `0..n` per coordinate.
pub fn first_failure2(n: usize, m: usize, mut ok: impl FnMut(usize, usize) -> bool) -> Option<Vec<usize>> {
    for i in 0..n {
        for j in 0..m {
            if !ok(i, j) {
                return Some(vec![i, j]);
            }
        }
    }
    None
}

pub fn first_failure(n: usize, mut ok: impl FnMut(usize) -> bool) -> Option<Vec<usize>> {
    (0..n).find(|&i| !ok(i)).map(|i| vec![i])
}
