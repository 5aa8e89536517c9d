//! File formats and certification reports for the construction pipeline.
//!
//! Everything the CLI reads or writes goes through here: matrices,
//! representations, complexes and diagrams as JSON; point clouds as JSON or
//! CSV; the ⊵ table as JSON or a text matrix; and the machine-readable
//! certification [`report`]s the subcommands emit.

pub mod io;
pub mod report;
