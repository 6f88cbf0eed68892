use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::order::Order;

/// Reduces a possibly negative value into the canonical residue `0..n`.
pub fn mod_reduce(value: i64, n: u32) -> u32 {
    debug_assert!(n > 0);
    value.rem_euclid(n as i64) as u32
}

/// Whether `values` is a permutation of `0..values.len()`.
pub fn is_permutation(values: &[u32]) -> bool {
    let n = values.len();
    let mut seen = vec![false; n];
    for &v in values {
        match seen.get_mut(v as usize) {
            Some(slot) if !*slot => *slot = true,
            _ => return false,
        }
    }
    true
}

/// A column of symbols over `Z_n`: entry `i` is the symbol in row `i` of
/// column 0 of a square developed cyclically.
///
/// Construction enforces that every symbol lies in `0..n` and that the
/// order is even; being a permutation is *not* an invariant of the type
/// (search works with partial knowledge and verification must be able to
/// represent broken input), so callers that need it ask via
/// [`ColumnVector::is_permutation`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColumnVector {
    values: Vec<u32>,
}

impl ColumnVector {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let order = Order::new(values.len() as u32)?;
        let n = order.get();
        if let Some(&bad) = values.iter().find(|&&v| v >= n) {
            return Err(Error::SymbolOutOfRange { value: bad, n });
        }
        Ok(ColumnVector { values })
    }

    /// The identity column `0, 1, ..., n-1`.
    pub fn identity(order: Order) -> Self {
        ColumnVector {
            values: (0..order.get()).collect(),
        }
    }

    pub fn order(&self) -> Order {
        // Length was validated as a legal order in `new`, and `identity`
        // starts from one.
        Order::new(self.values.len() as u32).expect("length is a valid order")
    }

    pub fn n(&self) -> u32 {
        self.values.len() as u32
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn is_permutation(&self) -> bool {
        is_permutation(&self.values)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u32> {
        self.values.iter()
    }
}

impl Index<usize> for ColumnVector {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.values[i]
    }
}

impl fmt::Display for ColumnVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn mod_reduce_handles_negatives() {
        assert_eq!(mod_reduce(-1, 14), 13);
        assert_eq!(mod_reduce(-14, 14), 0);
        assert_eq!(mod_reduce(27, 14), 13);
        assert_eq!(mod_reduce(0, 2), 0);
        assert_eq!(mod_reduce(i64::from(u32::MAX) * 2, u32::MAX), 0);
    }

    #[test]
    fn permutation_check_catches_repeats_and_gaps() {
        assert!(is_permutation(&[0, 1, 2, 3]));
        assert!(is_permutation(&[3, 1, 0, 2]));
        assert!(!is_permutation(&[0, 1, 1, 3]));
        assert!(!is_permutation(&[0, 1, 2, 4]));
        assert!(is_permutation(&[]));
    }

    #[test]
    fn new_rejects_out_of_range_symbols_and_odd_lengths() {
        assert_eq!(
            ColumnVector::new(vec![0, 4, 1, 2]),
            Err(Error::SymbolOutOfRange { value: 4, n: 4 })
        );
        assert_eq!(
            ColumnVector::new(vec![0, 1, 2]),
            Err(Error::OddOrder { n: 3 })
        );
        assert_eq!(ColumnVector::new(vec![]), Err(Error::OrderTooSmall { n: 0 }));
    }

    #[test]
    fn identity_is_a_permutation() {
        let c = ColumnVector::identity(Order::new(10).unwrap());
        assert!(c.is_permutation());
        assert_eq!(c.values(), &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9]);
    }

    proptest! {
        #[test]
        fn mod_reduce_agrees_with_rem_euclid_definition(v in -1_000_000i64..1_000_000, n in 1u32..10_000) {
            let r = mod_reduce(v, n);
            prop_assert!(r < n);
            // r differs from v by a multiple of n
            prop_assert_eq!((v - r as i64).rem_euclid(n as i64), 0);
        }

        #[test]
        fn shuffled_identity_is_permutation(n in 1usize..200, seed in any::<u64>()) {
            // Fisher-Yates with a splitmix-style generator; avoids pulling
            // rand into this unit test.
            let mut values: Vec<u32> = (0..n as u32).collect();
            let mut state = seed;
            for i in (1..n).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                values.swap(i, j);
            }
            prop_assert!(is_permutation(&values));
            // Breaking one entry must break the property.
            if n >= 2 {
                let first = values[0];
                values[0] = values[1];
                prop_assert!(!is_permutation(&values));
                values[0] = first;
            }
        }
    }
}
