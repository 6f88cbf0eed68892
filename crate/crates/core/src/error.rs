use thiserror::Error;

/// Errors produced by construction, verification, and search routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The order of a nearly orthogonal pair must be even: the pair
    /// `(x, x + n/2)` is only defined when `n/2` is an integer.
    #[error("order {n} is odd; nearly orthogonal squares require an even order")]
    OddOrder { n: u32 },

    /// Orders below 2 leave no room for even a single pair of symbols.
    #[error("order {n} is too small; the smallest supported order is 2")]
    OrderTooSmall { n: u32 },

    /// A symbol lies outside `0..n`.
    #[error("symbol {value} is out of range for order {n}")]
    SymbolOutOfRange { value: u32, n: u32 },

    /// Two vectors or squares that must share an order do not.
    #[error("order mismatch: expected {expected}, got {got}")]
    OrderMismatch { expected: u32, got: u32 },

    /// A column that must be a permutation of `0..n` is not.
    #[error("column is not a permutation of 0..{n}")]
    NotAPermutation { n: u32 },

    /// `48k + r` does not fit in a `u32` for this `k`.
    #[error("parameter k = {k} makes the order overflow; the largest supported k is {max_k}")]
    ParameterTooLarge { k: u64, max_k: u64 },

    /// An order that no supported residue class covers was requested.
    #[error("order {n} is not of the form 48k+14, 48k+22, 48k+38, or 48k+46")]
    UnsupportedOrder { n: u32 },

    /// Developing a square of this order would allocate n^2 cells.
    #[error("order {n} exceeds the largest developable order {max}")]
    SquareTooLarge { n: u32, max: u32 },

    /// Cell-by-cell comparison of two squares was requested above the ceiling.
    #[error("full verification of order {n} exceeds the ceiling {ceiling}; use profile mode or raise the ceiling")]
    FullCheckTooLarge { n: u32, ceiling: u32 },

    /// More squares were requested than the counting bound allows.
    #[error("t = {t} exceeds the upper bound {bound} for order {n}")]
    FamilySizeExceedsBound { t: u32, bound: u32, n: u32 },

    /// A search was asked to extend an empty base.
    #[error("search requires at least one base column")]
    EmptyBase,

    /// A built column failed its own validity check; this indicates a bug
    /// in the construction tables rather than bad input.
    #[error("internal construction check failed for order {n}: {detail}")]
    ConstructionCheckFailed { n: u32, detail: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
