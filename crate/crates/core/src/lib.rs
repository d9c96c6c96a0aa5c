//! Core algorithms for auditing and benchmarking heterophilous
//! node-classification datasets.
//!
//! Everything here is pure computation over in-memory data and builds
//! without `std` (only `alloc` is required). File formats, raw-data
//! importers and the command-line front end live in the `heterobench`
//! crate.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bucket;
pub mod dataset;
pub mod dedup;
pub mod error;
pub mod eval;
pub mod graph;
pub mod metrics;
pub mod rng;
pub mod splits;
pub mod synthgen;

pub use dataset::{Dataset, Split, SplitSet, Task};
pub use error::{Error, Result};
pub use graph::{BuildStats, Graph, NodeId};
