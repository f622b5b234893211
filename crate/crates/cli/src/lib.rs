//! Named verification suites over `torelli-core`, with versioned JSON reports.

pub mod report;
pub mod suites;

pub use report::{CheckRecord, Params, Status, SuiteReport, REPORT_SCHEMA_VERSION};
pub use suites::{run_suite, Suite, SuiteError};
