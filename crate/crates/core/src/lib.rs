//! Cyclic mutually nearly orthogonal Latin squares: construction,
//! verification, and search.
//!
//! Two Latin squares of even order `n` are *nearly orthogonal* when their
//! superimposition realizes the ordered pair `(x, x)` zero times, the pair
//! `(x, x + n/2)` twice, and every other ordered pair once. A set of
//! squares is mutually nearly orthogonal (an MNOLS set) when every two of
//! them are. This crate works with *cyclic* squares — each one developed
//! from its first column by `L(i, j) = c(i) + j (mod n)` — which reduces
//! every pairwise condition on `n^2` cells to a condition on the `n` row
//! differences of two columns ([`verify::difference_profile`] /
//! [`verify::is_quasi_difference`]).
//!
//! Three entry points:
//!
//! * [`construct::build_triple`] produces, for every order
//!   `n = 48k + r` with `r` in {14, 22, 38, 46}, three pairwise compatible
//!   columns in closed form: the identity plus two columns assembled from
//!   arithmetic progressions and completed by reflection.
//! * [`verify::verify_triple`] checks a triple either through `O(n)`
//!   difference profiles or cell by cell on the developed squares, and
//!   [`verify::gcd_certificates`] evaluates the coprimality identities the
//!   constructions rest on.
//! * [`search::find_cyclic_mnols`] looks for column sets of a requested
//!   size by budgeted, deterministic backtracking.

pub mod column;
pub mod construct;
pub mod error;
pub mod order;
pub mod profile;
pub mod search;
pub mod square;
pub mod verify;

pub use column::{is_permutation, mod_reduce, ColumnVector};
pub use construct::{
    build_triple, develop, family_of, half_column, identity_column, reflect_complete, BuiltColumn,
    HalfColumn, Triple, MAX_DEVELOPED_ORDER,
};
pub use error::{Error, Result};
pub use order::{FamilyId, FamilyTag, Order};
pub use profile::DifferenceProfile;
pub use search::{
    count_extensions, extend_search, find_cyclic_mnols, BudgetHit, CountOutcome, SearchBudget,
    SearchOptions, SearchOutcome,
};
pub use square::LatinSquare;
pub use verify::{
    check_near_orthogonal, difference_profile, gcd, gcd_certificates, has_reflection, is_latin,
    is_quasi_difference, mnols_bound, verify_triple, GcdCertificate, NearOrthoVerdict,
    PairCountViolation, VerificationReport, VerifyMode, DEFAULT_FULL_CEILING, TRIPLE_PAIRS,
};
