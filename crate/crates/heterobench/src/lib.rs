//! File formats, raw-data import and the command-line front end for
//! [`heterobench_core`].

pub mod cli;
pub mod io;
pub mod table;

pub use heterobench_core as core;
