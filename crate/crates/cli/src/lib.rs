//! File formats, run records and subcommands of the `maxcolor` tool.

pub mod app;
pub mod format;
pub mod record;
