//! File formats, run reports and the `gbw` command line on top of `gbw-core`.

pub mod cli;
pub mod io;
pub mod report;
