use alloc::format;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::budget::Caps;
use crate::error::Error;

/// A Red-Blue Dominating Set instance: is there a set of exactly `k` red
/// vertices whose neighborhoods cover every blue vertex?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RbdsInstance {
    pub red: usize,
    pub blue: usize,
    /// `(red index, blue index)` pairs, 0-based.
    pub edges: Vec<(usize, usize)>,
    pub k: usize,
}

impl RbdsInstance {
    pub fn new(
        red: usize,
        blue: usize,
        edges: Vec<(usize, usize)>,
        k: usize,
    ) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::Precondition("RBDS needs k >= 1".into()));
        }
        if let Some(&(r, b)) = edges.iter().find(|&&(r, b)| r >= red || b >= blue) {
            return Err(Error::Precondition(format!(
                "edge ({r},{b}) outside {red} red and {blue} blue vertices"
            )));
        }
        Ok(RbdsInstance {
            red,
            blue,
            edges,
            k,
        })
    }

    /// Blue neighborhoods of the red vertices.
    pub fn red_neighborhoods(&self) -> Vec<VertexSet> {
        let mut rows: Vec<VertexSet> = (0..self.red).map(|_| VertexSet::new(self.blue)).collect();
        for &(r, b) in &self.edges {
            rows[r].insert(b);
        }
        rows
    }
}

/// Exhaustive search over the `k`-subsets of the red side. Returns the first
/// dominating subset in lexicographic order.
pub fn rbds_bruteforce(inst: &RbdsInstance, caps: &Caps) -> Result<Option<Vec<usize>>, Error> {
    Caps::check("red side", inst.red, caps.rbds_red)?;
    if inst.k > inst.red {
        return Ok(None);
    }
    let rows = inst.red_neighborhoods();
    let target = VertexSet::full(inst.blue);
    let mut chosen: Vec<usize> = (0..inst.k).collect();
    loop {
        let mut covered = VertexSet::new(inst.blue);
        for &r in &chosen {
            covered.union_with(&rows[r]);
        }
        if covered == target {
            return Ok(Some(chosen));
        }
        // Advance to the next k-combination.
        let k = inst.k;
        let Some(i) = (0..k).rev().find(|&i| chosen[i] < inst.red - k + i) else {
            return Ok(None);
        };
        chosen[i] += 1;
        for j in i + 1..k {
            chosen[j] = chosen[j - 1] + 1;
        }
    }
}
