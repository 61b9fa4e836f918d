//! Named instances used by golden tests.

use alloc::vec;

use crate::oracle::{CnfFormula, RbdsInstance};

/// `(u1 ∨ u2 ∨ u3) ∧ (u1 ∨ u2 ∨ ¬u3) ∧ (¬u1 ∨ ¬u2 ∨ ¬u3)`, satisfiable.
pub fn golden_three_clause_formula() -> CnfFormula {
    CnfFormula::new(3, vec![[1, 2, 3], [1, 2, -3], [-1, -2, -3]]).expect("valid formula")
}

/// `(u3 ∨ u2 ∨ u1) ∧ (u1 ∨ u2 ∨ ¬u3)`, satisfiable.
pub fn golden_two_clause_formula() -> CnfFormula {
    CnfFormula::new(3, vec![[3, 2, 1], [1, 2, -3]]).expect("valid formula")
}

/// All eight sign patterns over three variables, unsatisfiable.
pub fn unsatisfiable_formula() -> CnfFormula {
    CnfFormula::all_sign_patterns()
}

/// Two red and two blue vertices joined by a perfect matching, `k = 1`.
pub fn rbds_matching() -> RbdsInstance {
    RbdsInstance::new(2, 2, vec![(0, 0), (1, 1)], 1).expect("valid instance")
}
