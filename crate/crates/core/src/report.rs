//! Pass/fail bookkeeping for the verification sweeps.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::Error;

const KEPT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub checks: u64,
    pub failures: u64,
    /// The first few failures, in sweep order.
    pub counterexamples: Vec<String>,
}

impl Report {
    pub fn new(name: &str) -> Self {
        Report { name: name.to_string(), checks: 0, failures: 0, counterexamples: Vec::new() }
    }

    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(describe());
        }
    }

    /// Records a failed check.
    pub fn fail(&mut self, what: String) {
        self.failures += 1;
        if self.counterexamples.len() < KEPT {
            self.counterexamples.push(what);
        }
    }

    /// Records an error raised while computing a check.
    pub fn error(&mut self, context: &str, e: &Error) {
        self.checks += 1;
        self.fail(format!("{context}: {e}"));
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn first_counterexample(&self) -> Option<&str> {
        self.counterexamples.first().map(String::as_str)
    }

    pub fn absorb(&mut self, other: Report) {
        self.checks += other.checks;
        self.failures += other.failures;
        for c in other.counterexamples {
            if self.counterexamples.len() < KEPT {
                self.counterexamples.push(c);
            }
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} ({} checks)", self.name, self.checks)
        } else {
            write!(f, "FAIL {} ({} of {} checks failed)", self.name, self.failures, self.checks)?;
            if let Some(c) = self.first_counterexample() {
                write!(f, ": {c}")?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_display() {
        let mut r = Report::new("demo");
        r.check(true, || unreachable!());
        assert_eq!(r.to_string(), "PASS demo (1 checks)");
        r.check(false, || "first".into());
        r.check(false, || "second".into());
        assert_eq!(r.to_string(), "FAIL demo (2 of 3 checks failed): first");
    }
}
