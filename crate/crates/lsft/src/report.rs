//! Pass/fail reporting for the identity suites.

use serde::Serialize;
use std::fmt;

/// One verified identity: named, with counterexamples when it fails.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub failures: Vec<String>,
}

impl Check {
    pub fn new(name: String, failures: Vec<String>) -> Self {
        Check { name, failures }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Serialize, Default)]
pub struct Report {
    pub name: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(name: &str) -> Self {
        Report { name: name.to_string(), checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.name)?;
        for c in &self.checks {
            if c.passed() {
                writeln!(f, "  ok   {}", c.name)?;
            } else {
                writeln!(f, "  FAIL {}", c.name)?;
                for fail in c.failures.iter().take(4) {
                    writeln!(f, "       {fail}")?;
                }
                if c.failures.len() > 4 {
                    writeln!(f, "       ... {} more", c.failures.len() - 4)?;
                }
            }
        }
        Ok(())
    }
}
