use core::fmt;
use core::str::FromStr;

use super::{
    recognize_wc_11, recognize_wc_20, wc_02, wc_fpt_with, wc_transversal_with, wc_via_nd_with,
};
use crate::budget::{Budget, Caps, Unlimited};
use crate::error::Error;
use crate::graph::Graph;
use crate::oracle::{is_well_covered_bruteforce_with, WcVerdict};
use crate::partition::{find_rl_partition_with, nd_decompose};

/// Well-coveredness procedures that produce a [`WcVerdict`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Brute,
    Transversal,
    Fpt,
    Nd,
    Special,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Brute,
        Method::Transversal,
        Method::Fpt,
        Method::Nd,
        Method::Special,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Transversal => "transversal",
            Method::Fpt => "fpt",
            Method::Nd => "nd",
            Method::Special => "special",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::Precondition(alloc::format!("unknown method {s:?}")))
    }
}

/// Whether `g` is an `(r, l)`-graph and well-covered.
pub fn recognize_wc_rl(g: &Graph, r: usize, l: usize) -> Result<bool, Error> {
    recognize_wc_rl_with(g, r, l, &Caps::default(), &mut Unlimited)
}

/// As [`recognize_wc_rl`] with explicit caps and budget.
///
/// `(0,1)`, `(1,0)`, `(0,2)`, `(1,1)` and `(2,0)` use their dedicated
/// tests, `r <= 1` uses the transversal method on a found partition, and
/// everything else finds a partition and then picks the cheapest exact
/// method that fits the caps.
pub fn recognize_wc_rl_with(
    g: &Graph,
    r: usize,
    l: usize,
    caps: &Caps,
    budget: &mut dyn Budget,
) -> Result<bool, Error> {
    match (r, l) {
        (0, 0) => Err(Error::Precondition("need r + l >= 1".into())),
        (0, 1) => Ok(g.is_clique(&g.vertex_set())),
        (1, 0) => Ok(g.edge_count() == 0),
        (1, 1) => Ok(recognize_wc_11(g).is_some()),
        (2, 0) => Ok(recognize_wc_20(g)),
        _ => {
            let Some(p) = find_rl_partition_with(g, r, l, budget)? else {
                return Ok(false);
            };
            let verdict = if (r, l) == (0, 2) {
                wc_02(g, &p)?
            } else if r <= 1 {
                wc_transversal_with(g, &p, budget)?
            } else if nd_decompose(g).width() <= caps.nd_parts {
                wc_via_nd_with(g, caps, budget)?
            } else if p.independent_union(g.vertex_count()).len() <= caps.fpt_independent {
                wc_fpt_with(g, &p, caps, budget)?
            } else {
                is_well_covered_bruteforce_with(g, caps, budget)?
            };
            Ok(verdict.well_covered)
        }
    }
}

/// True iff every maximal independent set of `g` has exactly `k` vertices.
pub fn k_well_covered(g: &Graph, k: usize, caps: &Caps) -> Result<bool, Error> {
    let v = best_verdict(g, caps, &mut Unlimited)?;
    Ok(v.min_size == k && v.max_size == k)
}

/// The quotient method when the neighborhood diversity fits the cap, brute
/// force otherwise.
pub(crate) fn best_verdict(
    g: &Graph,
    caps: &Caps,
    budget: &mut dyn Budget,
) -> Result<WcVerdict, Error> {
    if nd_decompose(g).width() <= caps.nd_parts {
        wc_via_nd_with(g, caps, budget)
    } else {
        is_well_covered_bruteforce_with(g, caps, budget)
    }
}
