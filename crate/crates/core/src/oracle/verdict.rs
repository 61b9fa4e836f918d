use crate::bitset::VertexSet;

/// Outcome of a well-coveredness check.
///
/// `witness_min` and `witness_max` are maximal independent sets of the
/// smallest and largest size; among sets of the same size the
/// lexicographically smallest one is reported, so every exact method returns
/// identical witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WcVerdict {
    pub well_covered: bool,
    pub min_size: usize,
    pub max_size: usize,
    pub witness_min: VertexSet,
    pub witness_max: VertexSet,
    /// Number of maximal independent sets examined, when the method visits
    /// every one of them.
    pub count_enumerated: Option<u64>,
}

impl WcVerdict {
    /// Checks `well_covered <=> min == max` and the witness sizes.
    pub fn is_consistent(&self) -> bool {
        self.well_covered == (self.min_size == self.max_size)
            && self.witness_min.len() == self.min_size
            && self.witness_max.len() == self.max_size
    }

    /// Compares decisions, sizes and witnesses but not the enumeration count.
    pub fn same_answer(&self, other: &WcVerdict) -> bool {
        self.well_covered == other.well_covered
            && self.min_size == other.min_size
            && self.max_size == other.max_size
            && self.witness_min == other.witness_min
            && self.witness_max == other.witness_max
    }
}

/// Folds maximal independent sets into a [`WcVerdict`].
#[derive(Debug, Clone, Default)]
pub struct VerdictBuilder {
    min: Option<VertexSet>,
    max: Option<VertexSet>,
    seen: u64,
}

impl VerdictBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn offer(&mut self, set: &VertexSet) {
        self.seen += 1;
        let size = set.len();
        let better_min = match &self.min {
            None => true,
            Some(m) => size < m.len() || (size == m.len() && set.cmp_lex(m).is_lt()),
        };
        if better_min {
            self.min = Some(set.clone());
        }
        let better_max = match &self.max {
            None => true,
            Some(m) => size > m.len() || (size == m.len() && set.cmp_lex(m).is_lt()),
        };
        if better_max {
            self.max = Some(set.clone());
        }
    }

    pub fn seen(&self) -> u64 {
        self.seen
    }

    /// `None` if nothing was offered.
    pub fn finish(self, counted: bool) -> Option<WcVerdict> {
        let (min, max) = (self.min?, self.max?);
        let v = WcVerdict {
            well_covered: min.len() == max.len(),
            min_size: min.len(),
            max_size: max.len(),
            witness_min: min,
            witness_max: max,
            count_enumerated: counted.then_some(self.seen),
        };
        debug_assert!(v.is_consistent());
        Some(v)
    }
}
