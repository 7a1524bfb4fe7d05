//! Verification harness, reports and command-line front end for the
//! identity catalog in `betatab-core`.

pub mod cli;
pub mod export;
pub mod report;
pub mod verify;
