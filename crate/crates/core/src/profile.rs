use crate::order::Order;

/// Histogram of row differences between two columns: `counts()[d]` is the
/// number of rows `i` with `a(i) - b(i) = d (mod n)`, taken over all `n`
/// rows.
///
/// Produced by [`crate::verify::difference_profile`]; the quasi-difference
/// test ([`crate::verify::is_quasi_difference`]) asks that `0` never occur,
/// `n/2` occur exactly twice, and every other residue exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceProfile {
    counts: Vec<u32>,
}

impl DifferenceProfile {
    pub(crate) fn from_counts(counts: Vec<u32>) -> Self {
        debug_assert!(counts.len() >= 2 && counts.len().is_multiple_of(2));
        DifferenceProfile { counts }
    }

    pub fn order(&self) -> Order {
        Order::new(self.counts.len() as u32).expect("profile length is a valid order")
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Occurrences of the difference `d`.
    pub fn count(&self, d: u32) -> u32 {
        self.counts[d as usize]
    }
}
