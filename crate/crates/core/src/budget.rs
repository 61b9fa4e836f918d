//! Search budgets and size caps.
//!
//! The core crate has no clock, so budgets are expressed through the
//! [`Budget`] trait: long-running searches call [`Budget::step`] once per
//! node and give up with [`Error::BudgetExhausted`](crate::Error) as soon as
//! it returns `false`. The std crate implements it on top of a deadline.

use crate::error::Error;

pub trait Budget {
    /// Accounts for one unit of work. Returns `false` once the search must stop.
    fn step(&mut self) -> bool;
}

/// Never runs out.
#[derive(Debug, Clone, Copy, Default)]
pub struct Unlimited;

impl Budget for Unlimited {
    #[inline]
    fn step(&mut self) -> bool {
        true
    }
}

/// Allows a fixed number of steps.
#[derive(Debug, Clone, Copy)]
pub struct StepBudget {
    remaining: u64,
}

impl StepBudget {
    pub fn new(steps: u64) -> Self {
        StepBudget { remaining: steps }
    }

    pub fn remaining(&self) -> u64 {
        self.remaining
    }
}

impl Budget for StepBudget {
    #[inline]
    fn step(&mut self) -> bool {
        if self.remaining == 0 {
            return false;
        }
        self.remaining -= 1;
        true
    }
}

impl<B: Budget + ?Sized> Budget for &mut B {
    #[inline]
    fn step(&mut self) -> bool {
        (**self).step()
    }
}

#[inline]
pub(crate) fn tick(budget: &mut dyn Budget) -> Result<(), Error> {
    if budget.step() {
        Ok(())
    } else {
        Err(Error::BudgetExhausted)
    }
}

/// Size caps of the exhaustive methods.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest vertex count accepted by maximal independent set enumeration.
    pub enum_vertices: usize,
    /// Largest variable count accepted by the SAT oracle.
    pub sat_vars: usize,
    /// Largest red side accepted by the red-blue dominating set oracle.
    pub rbds_red: usize,
    /// Largest total size of the independent blocks for the FPT solver.
    pub fpt_independent: usize,
    /// Largest neighborhood diversity for the quotient solver.
    pub nd_parts: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enum_vertices: 64,
            sat_vars: 24,
            rbds_red: 20,
            fpt_independent: 24,
            nd_parts: 24,
        }
    }
}

impl Caps {
    pub(crate) fn check(what: &'static str, value: usize, cap: usize) -> Result<(), Error> {
        if value > cap {
            Err(Error::CapExceeded { what, value, cap })
        } else {
            Ok(())
        }
    }
}
