use std::time::{Duration, Instant};

use wellcover_core::Budget;

/// Wall-clock budget. The clock is read every 1024 steps.
#[derive(Debug, Clone)]
pub struct Deadline {
    end: Option<Instant>,
    counter: u32,
    expired: bool,
}

impl Deadline {
    /// `None` never expires.
    pub fn new(limit: Option<Duration>) -> Self {
        Deadline {
            end: limit.map(|d| Instant::now() + d),
            counter: 0,
            expired: false,
        }
    }

    pub fn from_millis(ms: Option<u64>) -> Self {
        Deadline::new(ms.map(Duration::from_millis))
    }

    /// Expires at `end`; `None` never expires.
    pub fn until(end: Option<Instant>) -> Self {
        Deadline {
            end,
            counter: 0,
            expired: false,
        }
    }

    pub fn end(&self) -> Option<Instant> {
        self.end
    }
}

impl Budget for Deadline {
    fn step(&mut self) -> bool {
        let Some(end) = self.end else {
            return true;
        };
        if self.expired {
            return false;
        }
        self.counter = self.counter.wrapping_add(1);
        if self.counter % 1024 == 1 && Instant::now() >= end {
            self.expired = true;
        }
        !self.expired
    }
}
