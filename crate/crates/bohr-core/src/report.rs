//! Machine-readable check records shared by the verification suites and the
//! command-line tool's JSON reports.

use serde::Serialize;

/// One verified inequality or agreement check.
///
/// `slack` is the margin to the asserted bound — for an inequality
/// `LHS <= RHS` it is `RHS - LHS` (worst case over the check's samples), for
/// an agreement check `|x - y| <= tol` it is `tol - |x - y|` — so positive
/// slack means the check holds with room to spare. `pass` applies the
/// check's own threshold (some checks tolerate tiny negative slack from
/// truncation, one *requires* negative slack to prove a violation is
/// detectable).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub params: String,
    pub slack: f64,
    pub pass: bool,
}

impl CheckRecord {
    pub fn new(
        name: impl Into<String>,
        params: impl Into<String>,
        slack: f64,
        pass: bool,
    ) -> Self {
        Self {
            name: name.into(),
            params: params.into(),
            slack,
            pass,
        }
    }
}

/// A named batch of checks, reproducible from its seed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<CheckRecord>,
}

impl VerifyReport {
    pub fn new(suite: impl Into<String>, seed: u64, checks: Vec<CheckRecord>) -> Self {
        Self {
            suite: suite.into(),
            seed,
            checks,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}
