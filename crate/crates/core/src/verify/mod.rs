//! Verification suites. Each suite returns a [`Report`] whose lines are
//! sorted, so a fixed configuration always produces the same output.

mod covers;
mod identities;
mod sample;
mod structure;
mod suite;
mod tables;
mod tally;

use std::fmt;

pub use covers::{
    cover_rules, cover_verdict, hat_cover_rules, ideal_witnesses, rectangle, CoverVerdict, EtaCache,
};
pub use identities::{
    elementary_identities, family_identities, quotient_laws, weyl_laws, IdentityRange, SampleConfig,
};
pub use structure::{
    basis_dimensions, basis_triangularity, hat_sums, reconstruction, schubert_laws, splitting,
};
pub use suite::{jobs, Job, Suite, SuiteConfig};
pub use tables::{double_eta_table, hat_eta_table, DOUBLE_ETA_TABLE, HAT_ETA_TABLE};

/// One verified claim.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    /// Extra information: a failure description or a flag such as
    /// `ideal-required`.
    pub note: Option<String>,
}

impl Check {
    pub fn pass(suite: &str, name: impl Into<String>) -> Self {
        Check {
            suite: suite.into(),
            name: name.into(),
            passed: true,
            note: None,
        }
    }

    pub fn fail(suite: &str, name: impl Into<String>, why: impl Into<String>) -> Self {
        Check {
            suite: suite.into(),
            name: name.into(),
            passed: false,
            note: Some(why.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} [{}] {}", self.suite, self.name)?;
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

/// A list of checks.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct Report {
    checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    /// Sort lines by suite and name.
    pub fn sorted(mut self) -> Self {
        self.checks.sort();
        self
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        write!(f, "{}/{} passed", self.passed(), self.len())
    }
}
