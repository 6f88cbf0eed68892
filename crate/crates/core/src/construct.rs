//! Column constructions: arithmetic-progression half columns, reflection
//! completion, and cyclic development into full squares.
//!
//! For each supported order `n = 48k + r` the triple of columns is
//! `(identity, second, third)` where the second and third columns are built
//! in two steps: an explicit half column of length `n/2` whose even- and
//! odd-indexed entries each follow an arithmetic progression mod `n`, then
//! completion to length `n` by the reflection rule
//! `c(n-1-i) = (n-1) - c(i)`.

use crate::column::{mod_reduce, ColumnVector};
use crate::error::{Error, Result};
use crate::order::{FamilyId, FamilyTag, Order};
use crate::square::LatinSquare;

/// Which of the two constructed columns of a triple is being built
/// (the first column is always the identity).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuiltColumn {
    Second,
    Third,
}

impl BuiltColumn {
    pub const BOTH: [BuiltColumn; 2] = [BuiltColumn::Second, BuiltColumn::Third];

    /// Position of the column in the triple, 1-based (2 or 3).
    pub fn position(self) -> u8 {
        match self {
            BuiltColumn::Second => 2,
            BuiltColumn::Third => 3,
        }
    }
}

/// Starting values and common differences (as functions of `k`, evaluated
/// in `u64`) of the two interleaved progressions in one half column:
/// entry `2i` is `even_base + i * even_step` and entry `2i + 1` is
/// `odd_base + i * odd_step`, both reduced mod `n`.
struct ProgressionPair {
    even_base: u64,
    odd_base: u64,
    step: u64,
}

fn progressions(tag: FamilyTag, k: u64, which: BuiltColumn) -> ProgressionPair {
    use BuiltColumn::*;
    use FamilyTag::*;
    match (tag, which) {
        (R14, Second) => ProgressionPair {
            even_base: 6 * k + 1,
            odd_base: 12 * k + 3,
            step: 12 * k + 4,
        },
        (R14, Third) => ProgressionPair {
            even_base: 6 * k + 2,
            odd_base: 24 * k + 8,
            step: 12 * k + 5,
        },
        (R22, Second) => ProgressionPair {
            even_base: 30 * k + 13,
            odd_base: 12 * k + 5,
            step: 12 * k + 6,
        },
        (R22, Third) => ProgressionPair {
            even_base: 30 * k + 14,
            odd_base: 24 * k + 12,
            step: 12 * k + 7,
        },
        (R38, Second) => ProgressionPair {
            even_base: 30 * k + 23,
            odd_base: 12 * k + 9,
            step: 12 * k + 10,
        },
        (R38, Third) => ProgressionPair {
            even_base: 30 * k + 24,
            odd_base: 24 * k + 20,
            step: 12 * k + 11,
        },
        (R46, Second) => ProgressionPair {
            even_base: 6 * k + 5,
            odd_base: 12 * k + 11,
            step: 12 * k + 12,
        },
        (R46, Third) => ProgressionPair {
            even_base: 6 * k + 6,
            odd_base: 24 * k + 24,
            step: 12 * k + 13,
        },
    }
}

/// The first `n/2` entries of a constructed column, tagged with where they
/// came from so that completion and diagnostics can recover the context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfColumn {
    family: FamilyId,
    which: BuiltColumn,
    values: Vec<u32>,
}

impl HalfColumn {
    pub fn family(&self) -> FamilyId {
        self.family
    }

    pub fn which(&self) -> BuiltColumn {
        self.which
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn order(&self) -> Order {
        self.family.order()
    }
}

/// The identity column `0, 1, ..., n-1`, the first column of every triple.
pub fn identity_column(order: Order) -> ColumnVector {
    ColumnVector::identity(order)
}

/// Builds the half column of the second or third column for a family
/// member by evaluating its two arithmetic progressions.
pub fn half_column(family: FamilyId, which: BuiltColumn) -> HalfColumn {
    let n = family.order().get() as u64;
    let half = (n / 2) as usize;
    let p = progressions(family.tag(), family.k() as u64, which);
    let mut values = vec![0u32; half];
    let mut even = p.even_base % n;
    let mut odd = p.odd_base % n;
    let step = p.step % n;
    for (i, v) in values.iter_mut().enumerate() {
        if i % 2 == 0 {
            *v = even as u32;
            even += step;
            if even >= n {
                even -= n;
            }
        } else {
            *v = odd as u32;
            odd += step;
            if odd >= n {
                odd -= n;
            }
        }
    }
    HalfColumn {
        family,
        which,
        values,
    }
}

/// Completes a half column to a full column by the reflection rule:
/// the first half is copied verbatim and row `n-1-i` receives
/// `(n-1) - c(i)` for `0 <= i < n/2`.
pub fn reflect_complete(half: &HalfColumn) -> Result<ColumnVector> {
    let n = half.order().get();
    let h = half.values.len();
    debug_assert_eq!(h as u32, n / 2);
    let mut full = vec![0u32; n as usize];
    for (i, &v) in half.values.iter().enumerate() {
        if v >= n {
            return Err(Error::SymbolOutOfRange { value: v, n });
        }
        full[i] = v;
        full[n as usize - 1 - i] = (n - 1) - v;
    }
    ColumnVector::new(full)
}

/// A triple of pairwise nearly orthogonal column representatives:
/// the identity plus the two constructed columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triple {
    family: FamilyId,
    columns: [ColumnVector; 3],
}

impl Triple {
    pub fn family(&self) -> FamilyId {
        self.family
    }

    pub fn order(&self) -> Order {
        self.family.order()
    }

    pub fn columns(&self) -> &[ColumnVector; 3] {
        &self.columns
    }

    pub fn column(&self, i: usize) -> &ColumnVector {
        &self.columns[i]
    }
}

/// Builds the full column triple for a family member and checks its own
/// output: each constructed column must be a permutation satisfying the
/// reflection rule. A failure here means the progression tables are wrong,
/// not that the input was bad.
pub fn build_triple(family: FamilyId) -> Result<Triple> {
    let order = family.order();
    let n = order.get();
    let first = identity_column(order);
    let mut columns = vec![first];
    for which in BuiltColumn::BOTH {
        let full = reflect_complete(&half_column(family, which))?;
        if !full.is_permutation() {
            return Err(Error::ConstructionCheckFailed {
                n,
                detail: "constructed column is not a permutation",
            });
        }
        columns.push(full);
    }
    let columns: [ColumnVector; 3] = columns
        .try_into()
        .expect("exactly three columns were built");
    Ok(Triple { family, columns })
}

/// Recognizes which family, if any, covers the order `n`.
pub fn family_of(n: u32) -> Option<FamilyId> {
    FamilyId::of_order(n)
}

/// Largest order for which [`develop`] will materialize the full square;
/// beyond this, `n^2` cells would exceed a gigabyte.
pub const MAX_DEVELOPED_ORDER: u32 = 16_384;

/// Develops a column cyclically into a full square:
/// `L(i, j) = c(i) + j (mod n)`.
///
/// The result is Latin exactly when the column is a permutation, so a
/// non-permutation input is rejected up front.
pub fn develop(column: &ColumnVector) -> Result<LatinSquare> {
    let order = column.order();
    let n = order.get();
    if n > MAX_DEVELOPED_ORDER {
        return Err(Error::SquareTooLarge {
            n,
            max: MAX_DEVELOPED_ORDER,
        });
    }
    if !column.is_permutation() {
        return Err(Error::NotAPermutation { n });
    }
    let nu = n as usize;
    let mut cells = vec![0u32; nu * nu];
    for (i, &c) in column.values().iter().enumerate() {
        let row = &mut cells[i * nu..(i + 1) * nu];
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = mod_reduce(c as i64 + j as i64, n);
        }
    }
    LatinSquare::from_cells(order, cells)
}
