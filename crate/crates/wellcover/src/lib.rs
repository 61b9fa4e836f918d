//! File formats, command line front end, random generators, sweeps and
//! benchmarks for [`wellcover_core`].

pub mod bench;
pub mod cli;
pub mod deadline;
pub mod formats;
pub mod gen;
pub mod json;
pub mod sweep;

pub use deadline::Deadline;
