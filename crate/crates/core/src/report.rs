//! Structured outcomes of verification sweeps.

use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::{FactoredForm, LaurentPoly};

/// One side of a failed comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    /// A measure value or ratio.
    Factored(FactoredForm),
    /// A Laurent polynomial.
    Laurent(LaurentPoly),
    /// The computation itself failed.
    Error(crate::Error),
}

/// A counterexample: what was checked and both sides of the comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    /// Text form of the input (a partition, or a description of the case).
    pub subject: String,
    /// Left-hand side.
    pub lhs: Value,
    /// Right-hand side.
    pub rhs: Value,
}

/// Counts and counterexamples of one sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    /// Number of cases checked.
    pub checked: usize,
    /// Number of cases that held.
    pub passed: usize,
    /// Every case that did not hold, in sweep order.
    pub failures: Vec<Failure>,
    /// Inputs deliberately left out of the sweep, with the reason.
    pub excluded: Vec<(String, &'static str)>,
}

impl VerificationReport {
    /// Records one outcome.
    pub fn record(&mut self, outcome: Option<Failure>) {
        self.checked += 1;
        match outcome {
            None => self.passed += 1,
            Some(f) => self.failures.push(f),
        }
    }

    /// Appends another report's results (in order).
    pub fn merge(&mut self, other: VerificationReport) {
        self.checked += other.checked;
        self.passed += other.passed;
        self.failures.extend(other.failures);
        self.excluded.extend(other.excluded);
    }

    /// Whether every checked case held.
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty() && self.passed == self.checked
    }
}

impl FromIterator<Option<Failure>> for VerificationReport {
    fn from_iter<I: IntoIterator<Item = Option<Failure>>>(iter: I) -> Self {
        let mut report = VerificationReport::default();
        for outcome in iter {
            report.record(outcome);
        }
        report
    }
}
