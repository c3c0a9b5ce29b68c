use std::collections::BTreeMap;
use std::fmt::Write;

use cosgraph_core::catalog::{Check, CheckFlag, CheckList};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Overall {
    Pass,
    Fail,
}

/// Outcome of one command: checks with their anchors plus computed results.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub version: String,
    pub command: String,
    pub checks: Vec<Check>,
    pub overall: Overall,
    #[serde(default)]
    pub results: BTreeMap<String, Value>,
    /// Wall-clock milliseconds; left out unless asked for so output stays byte-stable.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Human,
    Json,
}

impl VerificationReport {
    pub fn new(command: impl Into<String>) -> Self {
        VerificationReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into(),
            checks: Vec::new(),
            overall: Overall::Pass,
            results: BTreeMap::new(),
            timing_ms: None,
        }
    }

    pub fn push(&mut self, check: Check) {
        if !check.pass {
            self.overall = Overall::Fail;
        }
        self.checks.push(check);
    }

    pub fn extend(&mut self, list: CheckList) {
        for c in list.checks {
            self.push(c);
        }
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }

    pub fn passed(&self) -> bool {
        self.overall == Overall::Pass
    }

    /// Folds `other` in, prefixing its check names and result keys with `tag`.
    pub fn merge(&mut self, tag: &str, other: VerificationReport) {
        for mut c in other.checks {
            c.name = format!("{tag}: {}", c.name);
            self.push(c);
        }
        for (k, v) in other.results {
            self.results.insert(format!("{tag}.{k}"), v);
        }
    }

    /// Orders checks by name, keeping equal names in their original order.
    pub fn sort_checks(&mut self) {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
    }

    pub fn to_json(&self) -> String {
        // Value maps are BTreeMaps, so keys come out sorted at every level
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes") + "\n"
    }

    pub fn to_human(&self) -> String {
        let mut out = format!("cosgraph {}: {}\n", self.version, self.command);
        for c in &self.checks {
            let mark = if c.pass { '✓' } else { '✗' };
            let flag = match c.flag {
                Some(CheckFlag::Constant) => " [constant]",
                Some(CheckFlag::PaperDiscrepancy) => " [paper-discrepancy]",
                None => "",
            };
            if c.pass {
                writeln!(out, "{mark} {} ({}): {}{flag}", c.name, c.paper_anchor, c.actual).unwrap();
            } else {
                writeln!(
                    out,
                    "{mark} {} ({}): expected {}, got {}{flag}",
                    c.name, c.paper_anchor, c.expected, c.actual
                )
                .unwrap();
            }
        }
        for (k, v) in &self.results {
            match v {
                Value::String(s) => writeln!(out, "  {k}: {s}").unwrap(),
                other => writeln!(out, "  {k}: {other}").unwrap(),
            }
        }
        if let Some(ms) = self.timing_ms {
            writeln!(out, "  time: {ms} ms").unwrap();
        }
        writeln!(out, "overall: {}", if self.passed() { "PASS" } else { "FAIL" }).unwrap();
        out
    }

    pub fn render(&self, mode: OutputMode) -> String {
        match mode {
            OutputMode::Human => self.to_human(),
            OutputMode::Json => self.to_json(),
        }
    }
}
