//! Claim-verification suites over the `chibound-core` solvers, plus the
//! plumbing shared with the `chibound` command-line tool.

pub mod error;
pub mod report;
pub mod suites;

pub use error::{HarnessError, Result};
pub use report::{Instance, Report, Summary};
pub use suites::{run_suite, Claim, SuiteConfig};
