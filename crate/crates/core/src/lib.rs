//! Recognition of well-covered graphs and of well-covered `(r, l)`-graphs.
//!
//! A graph is *well-covered* when all of its maximal independent sets have
//! the same size, and it is an `(r, l)`-graph when its vertex set splits into
//! `r` independent sets and `l` cliques. This crate contains
//!
//! - [`graph`]: immutable simple graphs plus the combinators the reductions
//!   are built from,
//! - [`oracle`]: exhaustive reference engines (maximal independent set
//!   enumeration, SAT, coloring, red-blue domination),
//! - [`partition`]: `(r, l)`-partition search and neighborhood-diversity
//!   decompositions,
//! - [`solvers`]: the specialised well-coveredness procedures,
//! - [`gadgets`]: hardness-reduction builders together with checkers for the
//!   equivalence each of them is supposed to preserve.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line front end and timing live in the `wellcover` crate.

#![no_std]

extern crate alloc;

pub mod bitset;
pub mod budget;
pub mod error;
pub mod gadgets;
pub mod graph;
pub mod oracle;
pub mod partition;
pub mod solvers;

pub use bitset::VertexSet;
pub use budget::{Budget, Caps, StepBudget, Unlimited};
pub use error::Error;
pub use graph::Graph;
pub use oracle::{CnfFormula, RbdsInstance, WcVerdict};
pub use partition::{NdDecomposition, PartKind, RlPartition};

pub type Result<T, E = Error> = core::result::Result<T, E>;
