//! Spec files, reports and command dispatch for the `tkk` binary.

pub mod report;
pub mod run;
pub mod spec;
