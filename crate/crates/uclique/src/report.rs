//! Machine-readable run reports for the command-line surface.
//!
//! Field names are stable; identical invocations produce byte-identical
//! reports apart from the timing entries. Counts are rendered in full
//! decimal, never scientific notation.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

/// Minimal failing instance attached to a failed verification: which input,
/// which clique order (when relevant), what was expected, what came out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub instance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one verification suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteVerdict {
    pub suite: String,
    pub instances: u64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl SuiteVerdict {
    pub fn pass(suite: &str, instances: u64) -> Self {
        Self {
            suite: suite.to_string(),
            instances,
            passed: true,
            counterexample: None,
        }
    }

    pub fn fail(suite: &str, instances: u64, counterexample: Counterexample) -> Self {
        Self {
            suite: suite.to_string(),
            instances,
            passed: false,
            counterexample: Some(counterexample),
        }
    }
}

/// Everything one command run produced: echoed inputs, results, suite
/// verdicts, and wall-clock timings (the only nondeterministic part).
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub results: BTreeMap<String, String>,
    pub verdicts: Vec<SuiteVerdict>,
    pub timings_ms: BTreeMap<String, f64>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            results: BTreeMap::new(),
            verdicts: Vec::new(),
            timings_ms: BTreeMap::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn result(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.results.insert(key.to_string(), value.to_string());
        self
    }

    pub fn timing(&mut self, key: &str, ms: f64) -> &mut Self {
        self.timings_ms.insert(key.to_string(), ms);
        self
    }

    pub fn verdict(&mut self, verdict: SuiteVerdict) -> &mut Self {
        self.verdicts.push(verdict);
        self
    }

    /// True when no attached suite failed.
    pub fn all_passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Plain-text rendering; deterministic apart from the timing lines.
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        for (k, v) in &self.inputs {
            let _ = writeln!(out, "  {k} = {v}");
        }
        for (k, v) in &self.results {
            if v.contains('\n') {
                let _ = writeln!(out, "{k}:");
                for line in v.lines() {
                    let _ = writeln!(out, "  {line}");
                }
            } else {
                let _ = writeln!(out, "{k}: {v}");
            }
        }
        for v in &self.verdicts {
            if v.passed {
                let _ = writeln!(out, "suite {}: pass ({} instances)", v.suite, v.instances);
            } else {
                let c = v
                    .counterexample
                    .as_ref()
                    .expect("failed verdicts carry a counterexample");
                let m = c.m.map(|m| format!(", m={m}")).unwrap_or_default();
                let _ = writeln!(
                    out,
                    "suite {}: FAIL at {}{} (expected {}, got {})",
                    v.suite, c.instance, m, c.expected, c.actual
                );
            }
        }
        for (k, v) in &self.timings_ms {
            let _ = writeln!(out, "time {k}: {v:.3} ms");
        }
        out
    }
}
