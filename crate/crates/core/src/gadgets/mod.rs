//! Reduction gadgets and checkers for the equivalences they carry.
//!
//! Each builder returns a [`GadgetOutput`]: the constructed graph with
//! readable vertex labels, the partition the construction fixes (if any) and
//! a [`Claim`] naming the equivalence. [`verify_gadget_claim`] evaluates both
//! sides of that equivalence with the exhaustive oracles.

mod cnf;
pub mod fixtures;
mod kwc;
mod mono;
mod rbds;
mod verify;

pub use cnf::{chvatal_slater, gadget_03, gadget_13, gadget_30, stockmeyer, StockmeyerMode};
pub use kwc::kwc_to_0l;
pub use mono::{mono_add_clique, mono_lift_r};
pub use rbds::rbds_gadget;
pub use verify::{rl_well_covered, verify_gadget_claim, ClaimReport, Source};

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::graph::Graph;
use crate::partition::RlPartition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimKind {
    /// Satisfiable iff not well-covered; maximal independent sets have `n` or `n + 1` vertices.
    ChvatalSlater,
    /// Satisfiable iff 3-colorable.
    Stockmeyer,
    /// Satisfiable iff `(0,3)`-well-covered.
    Gadget03,
    /// Satisfiable iff `(3,0)`-well-covered; always well-covered.
    Gadget30,
    /// Satisfiable iff `(1,3)`-well-covered.
    Gadget13,
    /// `(r,l)`-well-covered iff the output is `(r,l+1)`-well-covered.
    MonoAddClique,
    /// `(r,l)`-well-covered iff the output is `(r+1,l)`-well-covered.
    MonoLiftR,
    /// A red set of size `k` dominates the blue side iff not well-covered.
    Rbds,
    /// Well-covered iff the output is well-covered.
    Kwc,
}

impl ClaimKind {
    pub const ALL: [ClaimKind; 9] = [
        ClaimKind::ChvatalSlater,
        ClaimKind::Stockmeyer,
        ClaimKind::Gadget03,
        ClaimKind::Gadget30,
        ClaimKind::Gadget13,
        ClaimKind::MonoAddClique,
        ClaimKind::MonoLiftR,
        ClaimKind::Rbds,
        ClaimKind::Kwc,
    ];

    /// Gadget name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            ClaimKind::ChvatalSlater => "chvatal-slater",
            ClaimKind::Stockmeyer => "stockmeyer",
            ClaimKind::Gadget03 => "0-3",
            ClaimKind::Gadget30 => "3-0",
            ClaimKind::Gadget13 => "1-3",
            ClaimKind::MonoAddClique => "mono-clique",
            ClaimKind::MonoLiftR => "mono-lift",
            ClaimKind::Rbds => "rbds",
            ClaimKind::Kwc => "kwc",
        }
    }

    /// The equivalence in words, as `left <=> right`.
    pub fn statement(self) -> &'static str {
        match self {
            ClaimKind::ChvatalSlater => "formula satisfiable <=> graph not well-covered",
            ClaimKind::Stockmeyer => "formula satisfiable <=> graph 3-colorable",
            ClaimKind::Gadget03 => "formula satisfiable <=> graph (0,3)-well-covered",
            ClaimKind::Gadget30 => "formula satisfiable <=> graph (3,0)-well-covered",
            ClaimKind::Gadget13 => "formula satisfiable <=> graph (1,3)-well-covered",
            ClaimKind::MonoAddClique => "input (r,l)-well-covered <=> graph (r,l+1)-well-covered",
            ClaimKind::MonoLiftR => "input (r,l)-well-covered <=> graph (r+1,l)-well-covered",
            ClaimKind::Rbds => "size-k red dominating set exists <=> graph not well-covered",
            ClaimKind::Kwc => "input well-covered <=> graph well-covered",
        }
    }

    /// True for the gadgets built from a CNF formula.
    pub fn takes_formula(self) -> bool {
        matches!(
            self,
            ClaimKind::ChvatalSlater
                | ClaimKind::Stockmeyer
                | ClaimKind::Gadget03
                | ClaimKind::Gadget30
                | ClaimKind::Gadget13
        )
    }
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ClaimKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Precondition(alloc::format!("unknown gadget {s:?}")))
    }
}

/// Which equivalence a gadget output carries, with its integer parameters
/// in construction order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub kind: ClaimKind,
    pub params: Vec<(&'static str, usize)>,
}

impl Claim {
    pub fn param(&self, name: &str) -> Option<usize> {
        self.params
            .iter()
            .find(|(k, _)| *k == name)
            .map(|&(_, v)| v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetOutput {
    pub graph: Graph,
    pub partition: Option<RlPartition>,
    pub claim: Claim,
}
