//! Library surface of the CLI crate: graph I/O formats and report
//! rendering, shared between the binary and its tests.

pub mod io;
pub mod report;
