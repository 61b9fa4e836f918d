use alloc::format;
use alloc::vec::Vec;

use crate::budget::Caps;
use crate::error::Error;

/// A 3-CNF formula over the variables `1..=num_vars`.
///
/// A positive literal `i` stands for `u_i`, a negative one `-i` for its
/// negation. Repeated literals and complementary pairs inside a clause are
/// allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<[i32; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[i32; 3]>) -> Result<Self, Error> {
        for (j, clause) in clauses.iter().enumerate() {
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > num_vars {
                    return Err(Error::Precondition(format!(
                        "clause {} has literal {lit} outside 1..={num_vars}",
                        j + 1
                    )));
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[i32; 3]] {
        &self.clauses
    }

    /// Whether `assignment[i]` (truth of variable `i + 1`) satisfies every clause.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|&lit| assignment[lit.unsigned_abs() as usize - 1] == (lit > 0))
        })
    }

    /// All eight clauses over `u_1, u_2, u_3`, which no assignment satisfies.
    pub fn all_sign_patterns() -> CnfFormula {
        let clauses = (0..8)
            .map(|bits: i32| [1, 2, 3].map(|v| if bits >> (v - 1) & 1 == 1 { -v } else { v }))
            .collect();
        CnfFormula {
            num_vars: 3,
            clauses,
        }
    }
}

/// Exhaustive satisfiability. Returns the first satisfying assignment in
/// binary counting order (variable 1 is the lowest bit).
pub fn sat_bruteforce(f: &CnfFormula, caps: &Caps) -> Result<Option<Vec<bool>>, Error> {
    Caps::check("variable count", f.num_vars, caps.sat_vars)?;
    let n = f.num_vars;
    // Each clause as (mask of variables that satisfy when true, when false).
    let clauses: Vec<(u32, u32)> = f
        .clauses
        .iter()
        .map(|c| {
            c.iter().fold((0u32, 0u32), |(pos, neg), &lit| {
                let bit = 1u32 << (lit.unsigned_abs() - 1);
                if lit > 0 {
                    (pos | bit, neg)
                } else {
                    (pos, neg | bit)
                }
            })
        })
        .collect();
    for mask in 0u32..(1u32 << n) {
        if clauses
            .iter()
            .all(|&(pos, neg)| mask & pos != 0 || !mask & neg != 0)
        {
            return Ok(Some((0..n).map(|i| mask >> i & 1 == 1).collect()));
        }
    }
    Ok(None)
}
