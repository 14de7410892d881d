//! Axiom reports: per-check status with localized defects.

use serde::Serialize;

/// At most this many defects are kept per check; the count is always exact.
pub const MAX_DEFECTS: usize = 20;

/// A nonzero defect and where it was found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Defect {
    pub location: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    /// Number of instances evaluated.
    pub cells: usize,
    /// Number of instances with a nonzero defect.
    pub failures: usize,
    /// The first [`MAX_DEFECTS`] failures in cell order.
    pub defects: Vec<Defect>,
}

impl CheckResult {
    pub fn new(name: &str) -> Self {
        CheckResult { name: name.to_string(), cells: 0, failures: 0, defects: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Records one evaluated cell; `defect` is `None` when it vanished.
    pub fn record(&mut self, location: impl FnOnce() -> String, defect: Option<String>) {
        self.cells += 1;
        if let Some(value) = defect {
            self.failures += 1;
            if self.defects.len() < MAX_DEFECTS {
                self.defects.push(Defect { location: location(), value });
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub subject: String,
    /// What the checks quantify over, e.g. "verified on generators".
    pub scope: String,
    pub window: Option<(i64, i64)>,
    pub checks: Vec<CheckResult>,
    /// Informational lines that carry no pass/fail judgment.
    pub notes: Vec<String>,
}

impl AxiomReport {
    pub fn new(subject: &str, scope: &str, window: Option<(i64, i64)>) -> Self {
        AxiomReport { subject: subject.into(), scope: scope.into(), window, checks: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "PASS"
        } else {
            "FAIL"
        }
    }

    pub fn to_human(&self) -> String {
        let mut out = format!("{}: {} ({})\n", self.subject, self.status(), self.scope);
        if let Some((lo, hi)) = self.window {
            out.push_str(&format!("mode window [{lo}, {hi}]\n"));
        }
        for c in &self.checks {
            let status = if c.passed() { "ok" } else { "FAIL" };
            out.push_str(&format!("  {:<28} {:>4}  {} cells, {} defects\n", c.name, status, c.cells, c.failures));
            for d in &c.defects {
                out.push_str(&format!("      at {}: {}\n", d.location, d.value));
            }
            if c.failures > c.defects.len() {
                out.push_str(&format!("      ... {} more\n", c.failures - c.defects.len()));
            }
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        out
    }

    /// One JSON record per check followed by a summary record.
    pub fn to_machine(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let rec = serde_json::json!({
                "record": "check",
                "subject": self.subject,
                "check": c.name,
                "status": if c.passed() { "PASS" } else { "FAIL" },
                "cells": c.cells,
                "failures": c.failures,
                "defects": c.defects,
            });
            out.push_str(&rec.to_string());
            out.push('\n');
        }
        let summary = serde_json::json!({
            "record": "summary",
            "subject": self.subject,
            "status": self.status(),
            "scope": self.scope,
            "window": self.window.map(|(lo, hi)| [lo, hi]),
            "notes": self.notes,
        });
        out.push_str(&summary.to_string());
        out.push('\n');
        out
    }
}
