use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

/// Marks a check whose verdict rests on something other than a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckFlag {
    /// Uses a stored order that this crate does not derive.
    Constant,
    /// The printed source disagrees with the computed value; see `actual`.
    PaperDiscrepancy,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub paper_anchor: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flag: Option<CheckFlag>,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        paper_anchor: impl Into<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
        pass: bool,
    ) -> Self {
        Check {
            name: name.into(),
            paper_anchor: paper_anchor.into(),
            expected: expected.into(),
            actual: actual.into(),
            pass,
            flag: None,
        }
    }

    pub fn flagged(mut self, flag: CheckFlag) -> Self {
        self.flag = Some(flag);
        self
    }
}

/// Ordered list of checks; passes when every check does.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckList {
    pub checks: Vec<Check>,
}

impl CheckList {
    pub fn new() -> Self {
        CheckList::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn extend(&mut self, other: CheckList) {
        self.checks.extend(other.checks);
    }
}
