//! Front end of the `e6check` verifier: subcommands and their reports.
//!
//! Each subcommand returns a list of [`report::CheckResult`]s; `main`
//! assembles them into a [`report::RunReport`] and maps the verdict to an
//! exit code (0 pass, 1 fail, 2 invalid input).

pub mod commands;
pub mod report;

pub use commands::UsageError;
pub use report::{CheckResult, RunReport, Status};
