//! Verification harness for the Jack positivity conjectures: a disk cache of
//! Jack expansions, a catalog of exact checks, and reports.

pub mod cache;
pub mod checks;
pub mod error;
pub mod report;

pub use cache::JackStore;
pub use checks::{CheckId, CheckResult, Fault, Harness, Params, Status, Witness};
pub use error::{HarnessError, Result};
