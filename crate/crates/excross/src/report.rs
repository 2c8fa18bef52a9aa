//! Structured pass/fail reports with witnesses, shared by the validators and
//! the CLI. Serialization order is deterministic.

use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, pass: bool, witness: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            witness,
        });
    }

    pub fn push_pass(&mut self, name: impl Into<String>) {
        self.push(name, true, None);
    }

    pub fn push_fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.push(name, false, Some(witness.into()));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// One-line summary for error messages.
    pub fn summary(&self) -> String {
        match self.first_failure() {
            None => format!("{}: all {} checks passed", self.title, self.checks.len()),
            Some(c) => format!(
                "{}: check {:?} failed{}",
                self.title,
                c.name,
                c.witness
                    .as_deref()
                    .map(|w| format!(" ({w})"))
                    .unwrap_or_default()
            ),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.checks {
            match (&c.pass, &c.witness) {
                (true, _) => writeln!(f, "  ok   {}", c.name)?,
                (false, Some(w)) => writeln!(f, "  FAIL {}: {}", c.name, w)?,
                (false, None) => writeln!(f, "  FAIL {}", c.name)?,
            }
        }
        Ok(())
    }
}
