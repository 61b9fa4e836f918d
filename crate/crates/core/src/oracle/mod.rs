//! Exhaustive reference engines.
//!
//! Everything here is deliberately simple and exact; the specialised solvers
//! and the reduction gadgets are checked against these routines.

mod coloring;
mod mis;
mod rbds;
mod sat;
mod verdict;

pub use coloring::is_k_colorable;
pub use mis::{
    enumerate_maximal_independent_sets, greedy_maximal_independent_set, is_maximal_independent,
    is_well_covered_bruteforce, is_well_covered_bruteforce_with, max_independent_set_size,
    MaximalIndependentSets,
};
pub use rbds::{rbds_bruteforce, RbdsInstance};
pub use sat::{sat_bruteforce, CnfFormula};
pub use verdict::{VerdictBuilder, WcVerdict};
