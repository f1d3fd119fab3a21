//! Small-digraph enumeration and the verification suites.

mod enumerate;
mod suites;

pub use enumerate::{canonical_form, enumerate, enumerate_all, enumeration_budget, EnumerationSpec};
pub use suites::{
    circulant, verify, Counterexample, Instance, Outcome, Suite, SuiteKind, SuiteParams, TreeTask,
    UnknownSuite, Verdict,
};
