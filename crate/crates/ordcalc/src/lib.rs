//! Verification harness, structured reports and the command-line front end
//! for the ordering library.

pub mod report;
pub mod verify;

pub use report::{Report, Stats, Verdict};
pub use verify::VerifyOptions;
