//! Verification: Latin and reflection checks, difference profiles, the
//! quasi-difference criterion, cell-by-cell near-orthogonality, the counting
//! bound, and the coprimality certificates underpinning each construction.
//!
//! The cheap road and the expensive road meet in [`verify_triple`]: profile
//! mode checks the `O(n)` difference profiles that the development argument
//! shows are equivalent to near-orthogonality of the developed squares,
//! while full mode additionally develops the squares and compares every
//! ordered-pair count against the definition.

use crate::column::ColumnVector;
use crate::construct::{develop, Triple};
use crate::error::{Error, Result};
use crate::order::{FamilyId, FamilyTag, Order};
use crate::profile::DifferenceProfile;
use crate::square::LatinSquare;

/// Whether every row and every column of the square is a permutation.
pub fn is_latin(square: &LatinSquare) -> bool {
    let n = square.n() as usize;
    let mut seen = vec![false; n];
    for row in square.rows() {
        seen.fill(false);
        for &v in row {
            let slot = &mut seen[v as usize];
            if *slot {
                return false;
            }
            *slot = true;
        }
    }
    for col in 0..n {
        seen.fill(false);
        for row in 0..n {
            let v = square.get(row, col) as usize;
            let slot = &mut seen[v];
            if *slot {
                return false;
            }
            *slot = true;
        }
    }
    true
}

/// Whether the column satisfies the reflection rule
/// `c(i) + c(n-1-i) = n-1 (mod n)` for `0 <= i < n/2`.
pub fn has_reflection(column: &ColumnVector) -> bool {
    let n = column.n();
    let values = column.values();
    let nu = n as usize;
    (0..nu / 2).all(|i| (values[i] + values[nu - 1 - i]) % n == n - 1)
}

/// Histogram of the row differences `minuend(i) - subtrahend(i) (mod n)`
/// over all `n` rows.
pub fn difference_profile(
    minuend: &ColumnVector,
    subtrahend: &ColumnVector,
) -> Result<DifferenceProfile> {
    let n = minuend.n();
    if subtrahend.n() != n {
        return Err(Error::OrderMismatch {
            expected: n,
            got: subtrahend.n(),
        });
    }
    let mut counts = vec![0u32; n as usize];
    for (&a, &b) in minuend.iter().zip(subtrahend.iter()) {
        let d = if a >= b { a - b } else { a + n - b };
        counts[d as usize] += 1;
    }
    Ok(DifferenceProfile::from_counts(counts))
}

/// The quasi-difference criterion: difference `0` never occurs, `n/2`
/// occurs exactly twice, and every other residue exactly once.
///
/// Developing two columns whose profile passes this test yields a nearly
/// orthogonal pair of squares, and conversely.
pub fn is_quasi_difference(profile: &DifferenceProfile) -> bool {
    let n = profile.order().get();
    let half = profile.order().half();
    profile.counts().iter().enumerate().all(|(d, &c)| {
        let expected = expected_difference_count(d as u32, n, half);
        c == expected
    })
}

fn expected_difference_count(d: u32, _n: u32, half: u32) -> u32 {
    if d == 0 {
        0
    } else if d == half {
        2
    } else {
        1
    }
}

/// One ordered pair whose observed count disagrees with the definition of
/// near-orthogonality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairCountViolation {
    pub x: u32,
    pub y: u32,
    pub expected: u32,
    pub observed: u32,
}

/// Outcome of the cell-by-cell near-orthogonality check of two squares.
///
/// `violations` holds at most [`NearOrthoVerdict::MAX_RECORDED`] entries;
/// `total_violations` always counts all of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearOrthoVerdict {
    pub pass: bool,
    pub violations: Vec<PairCountViolation>,
    pub total_violations: u64,
}

impl NearOrthoVerdict {
    pub const MAX_RECORDED: usize = 100;
}

/// Counts every ordered pair `(L(i,j), M(i,j))` of the superimposition and
/// compares the counts against the definition: `(x, x)` never, `(x, x + n/2)`
/// exactly twice, every other ordered pair exactly once.
pub fn check_near_orthogonal(l: &LatinSquare, m: &LatinSquare) -> Result<NearOrthoVerdict> {
    let n = l.n();
    if m.n() != n {
        return Err(Error::OrderMismatch {
            expected: n,
            got: m.n(),
        });
    }
    let nu = n as usize;
    let half = n / 2;
    let mut histogram = vec![0u32; nu * nu];
    for (lrow, mrow) in l.rows().zip(m.rows()) {
        for (&x, &y) in lrow.iter().zip(mrow.iter()) {
            histogram[x as usize * nu + y as usize] += 1;
        }
    }
    let mut violations = Vec::new();
    let mut total_violations = 0u64;
    for x in 0..n {
        for y in 0..n {
            let expected = if x == y {
                0
            } else if y == (x + half) % n {
                2
            } else {
                1
            };
            let observed = histogram[x as usize * nu + y as usize];
            if observed != expected {
                total_violations += 1;
                if violations.len() < NearOrthoVerdict::MAX_RECORDED {
                    violations.push(PairCountViolation {
                        x,
                        y,
                        expected,
                        observed,
                    });
                }
            }
        }
    }
    Ok(NearOrthoVerdict {
        pass: total_violations == 0,
        violations,
        total_violations,
    })
}

/// Upper bound on the size of a set of pairwise nearly orthogonal Latin
/// squares of even order `n`: `n/2 + 1` when `n = 2 (mod 4)`, `n/2` when
/// `n = 0 (mod 4)`.
pub fn mnols_bound(order: Order) -> u32 {
    let n = order.get();
    if n % 4 == 2 {
        n / 2 + 1
    } else {
        n / 2
    }
}

/// One coprimality certificate: a closed-form identity over `k` whose value
/// should witness `gcd(claim.0, claim.1) = 1`, evaluated verbatim at a
/// concrete `k`, together with the gcd computed independently by Euclid's
/// algorithm.
///
/// `holds` records whether the identity as written evaluates to 1. One of
/// the sixteen identities (index 4 of the `48k+46` family) does not — its
/// printed coefficients are wrong for every `k` — while Euclid still
/// confirms the coprimality claim itself; consumers must read `gcd`, not
/// `holds`, as the ground truth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdCertificate {
    pub family: FamilyTag,
    pub k: u32,
    pub identity_index: u8,
    pub identity_text: &'static str,
    pub evaluated: i128,
    pub holds: bool,
    pub claim: (u64, u64),
    pub gcd: u64,
}

/// Euclid's algorithm on `u64`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

struct IdentityRow {
    index: u8,
    text: &'static str,
    eval: fn(i128) -> i128,
    claim: fn(u64) -> (u64, u64),
}

const IDENTITIES_14: [IdentityRow; 4] = [
    IdentityRow {
        index: 1,
        text: "4(6k+2) - (24k+7) = 1",
        eval: |k| 4 * (6 * k + 2) - (24 * k + 7),
        claim: |k| (6 * k + 2, 24 * k + 7),
    },
    IdentityRow {
        index: 2,
        text: "(8k+3)(12k+5) - (2k+1)(48k+14) = 1",
        eval: |k| (8 * k + 3) * (12 * k + 5) - (2 * k + 1) * (48 * k + 14),
        claim: |k| (12 * k + 5, 48 * k + 14),
    },
    IdentityRow {
        index: 3,
        text: "(4k+1)(24k+7) - (16k+6)(6k+1) = 1",
        eval: |k| (4 * k + 1) * (24 * k + 7) - (16 * k + 6) * (6 * k + 1),
        claim: |k| (6 * k + 1, 24 * k + 7),
    },
    IdentityRow {
        index: 4,
        text: "(24k+5)(12k+3) - (6k+1)(48k+14) = 1",
        eval: |k| (24 * k + 5) * (12 * k + 3) - (6 * k + 1) * (48 * k + 14),
        claim: |k| (12 * k + 3, 48 * k + 14),
    },
];

const IDENTITIES_22: [IdentityRow; 4] = [
    IdentityRow {
        index: 1,
        text: "4(6k+3) - (24k+11) = 1",
        eval: |k| 4 * (6 * k + 3) - (24 * k + 11),
        claim: |k| (6 * k + 3, 24 * k + 11),
    },
    IdentityRow {
        index: 2,
        text: "(2k+1)(48k+22) - (8k+3)(12k+7) = 1",
        eval: |k| (2 * k + 1) * (48 * k + 22) - (8 * k + 3) * (12 * k + 7),
        claim: |k| (12 * k + 7, 48 * k + 22),
    },
    IdentityRow {
        index: 3,
        text: "(2k+1)(24k+11) - (8k+5)(6k+2) = 1",
        eval: |k| (2 * k + 1) * (24 * k + 11) - (8 * k + 5) * (6 * k + 2),
        claim: |k| (6 * k + 2, 24 * k + 11),
    },
    IdentityRow {
        index: 4,
        text: "(24k+9)(12k+5) - (6k+2)(48k+22) = 1",
        eval: |k| (24 * k + 9) * (12 * k + 5) - (6 * k + 2) * (48 * k + 22),
        claim: |k| (12 * k + 5, 48 * k + 22),
    },
];

const IDENTITIES_38: [IdentityRow; 4] = [
    IdentityRow {
        index: 1,
        text: "4(6k+5) - (24k+19) = 1",
        eval: |k| 4 * (6 * k + 5) - (24 * k + 19),
        claim: |k| (6 * k + 5, 24 * k + 19),
    },
    IdentityRow {
        index: 2,
        text: "(8k+7)(12k+11) - (2k+2)(48k+38) = 1",
        eval: |k| (8 * k + 7) * (12 * k + 11) - (2 * k + 2) * (48 * k + 38),
        claim: |k| (12 * k + 11, 48 * k + 38),
    },
    IdentityRow {
        index: 3,
        text: "(8k+5)(6k+4) - (2k+1)(24k+19) = 1",
        eval: |k| (8 * k + 5) * (6 * k + 4) - (2 * k + 1) * (24 * k + 19),
        claim: |k| (6 * k + 4, 24 * k + 19),
    },
    IdentityRow {
        index: 4,
        text: "(24k+17)(12k+9) - (6k+4)(48k+38) = 1",
        eval: |k| (24 * k + 17) * (12 * k + 9) - (6 * k + 4) * (48 * k + 38),
        claim: |k| (12 * k + 9, 48 * k + 38),
    },
];

const IDENTITIES_46: [IdentityRow; 4] = [
    IdentityRow {
        index: 1,
        text: "4(6k+6) - (24k+23) = 1",
        eval: |k| 4 * (6 * k + 6) - (24 * k + 23),
        claim: |k| (6 * k + 6, 24 * k + 23),
    },
    IdentityRow {
        index: 2,
        text: "(-8k-7)(12k+13) + (2k+2)(48k+46) = 1",
        eval: |k| (-8 * k - 7) * (12 * k + 13) + (2 * k + 2) * (48 * k + 46),
        claim: |k| (12 * k + 13, 48 * k + 46),
    },
    IdentityRow {
        index: 3,
        text: "(-8k-9)(6k+5) + (2k+2)(24k+23) = 1",
        eval: |k| (-8 * k - 9) * (6 * k + 5) + (2 * k + 2) * (24 * k + 23),
        claim: |k| (6 * k + 5, 24 * k + 23),
    },
    IdentityRow {
        // As written this one evaluates to 576k^2 + 1080k + 507, never 1:
        // its coefficients do not form a valid combination for the claim.
        // The claim itself is still true — `gcd` carries the Euclid result —
        // and we deliberately evaluate the identity verbatim rather than
        // repairing it, so `holds` is false for every k.
        index: 4,
        text: "(24k+21)(12k+11) + (6k+6)(48k+46) = 1",
        eval: |k| (24 * k + 21) * (12 * k + 11) + (6 * k + 6) * (48 * k + 46),
        claim: |k| (12 * k + 11, 48 * k + 46),
    },
];

fn identity_table(tag: FamilyTag) -> &'static [IdentityRow; 4] {
    match tag {
        FamilyTag::R14 => &IDENTITIES_14,
        FamilyTag::R22 => &IDENTITIES_22,
        FamilyTag::R38 => &IDENTITIES_38,
        FamilyTag::R46 => &IDENTITIES_46,
    }
}

/// Evaluates the four coprimality certificates of a family member.
pub fn gcd_certificates(family: FamilyId) -> Vec<GcdCertificate> {
    let k = family.k();
    identity_table(family.tag())
        .iter()
        .map(|row| {
            let evaluated = (row.eval)(k as i128);
            let claim = (row.claim)(k as u64);
            GcdCertificate {
                family: family.tag(),
                k,
                identity_index: row.index,
                identity_text: row.text,
                evaluated,
                holds: evaluated == 1,
                claim,
                gcd: gcd(claim.0, claim.1),
            }
        })
        .collect()
}

/// How much of a triple to verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// Permutation, reflection, and difference-profile checks: `O(n)`.
    Profile,
    /// Everything in `Profile`, plus developing all three squares and
    /// checking Latinness and every ordered-pair count: `O(n^2)`.
    Full,
}

/// Largest order accepted in full mode unless the caller raises it.
pub const DEFAULT_FULL_CEILING: u32 = 4096;

/// Unordered column pairs of a triple, as (later, earlier) indices; profiles
/// are taken as `column[later] - column[earlier]`.
pub const TRIPLE_PAIRS: [(usize, usize); 3] = [(1, 0), (2, 0), (2, 1)];

/// Everything `verify_triple` measured, plus the overall verdict.
///
/// `column_has_reflection` is informational: the constructions guarantee it,
/// but near-orthogonality does not require it, so it does not gate `pass`.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub family: FamilyId,
    pub n: u32,
    pub mode: VerifyMode,
    pub column_is_permutation: [bool; 3],
    pub column_has_reflection: [bool; 3],
    /// Quasi-difference verdict per pair, in [`TRIPLE_PAIRS`] order.
    pub pair_profile_ok: [bool; 3],
    /// Full mode only: Latinness of each developed square.
    pub square_is_latin: Option<[bool; 3]>,
    /// Full mode only: cell-by-cell verdict per pair, in [`TRIPLE_PAIRS`] order.
    pub pair_verdicts: Option<[NearOrthoVerdict; 3]>,
    pub pass: bool,
}

/// Verifies a constructed triple.
///
/// Profile mode costs `O(n)` and relies on the equivalence between
/// quasi-difference profiles and near-orthogonality of developed squares.
/// Full mode materializes the three `n x n` squares, so it refuses orders
/// above `full_ceiling` with [`Error::FullCheckTooLarge`].
pub fn verify_triple(
    triple: &Triple,
    mode: VerifyMode,
    full_ceiling: u32,
) -> Result<VerificationReport> {
    let n = triple.order().get();
    let columns = triple.columns();

    let column_is_permutation =
        [0, 1, 2].map(|i| columns[i].is_permutation());
    let column_has_reflection = [0, 1, 2].map(|i| has_reflection(&columns[i]));
    let mut pair_profile_ok = [false; 3];
    for (slot, &(later, earlier)) in TRIPLE_PAIRS.iter().enumerate() {
        let profile = difference_profile(&columns[later], &columns[earlier])?;
        pair_profile_ok[slot] = is_quasi_difference(&profile);
    }

    let mut square_is_latin = None;
    let mut pair_verdicts: Option<[NearOrthoVerdict; 3]> = None;
    if mode == VerifyMode::Full {
        if n > full_ceiling {
            return Err(Error::FullCheckTooLarge {
                n,
                ceiling: full_ceiling,
            });
        }
        let squares = [
            develop(&columns[0])?,
            develop(&columns[1])?,
            develop(&columns[2])?,
        ];
        square_is_latin = Some([0, 1, 2].map(|i| is_latin(&squares[i])));
        let mut verdicts = Vec::with_capacity(3);
        for &(later, earlier) in &TRIPLE_PAIRS {
            verdicts.push(check_near_orthogonal(&squares[earlier], &squares[later])?);
        }
        pair_verdicts = Some(
            verdicts
                .try_into()
                .expect("exactly three pair verdicts were computed"),
        );
    }

    let mut pass = column_is_permutation.iter().all(|&b| b)
        && pair_profile_ok.iter().all(|&b| b);
    if let Some(latin) = &square_is_latin {
        pass = pass && latin.iter().all(|&b| b);
    }
    if let Some(verdicts) = &pair_verdicts {
        pass = pass && verdicts.iter().all(|v| v.pass);
    }

    Ok(VerificationReport {
        family: triple.family(),
        n,
        mode,
        column_is_permutation,
        column_has_reflection,
        pair_profile_ok,
        square_is_latin,
        pair_verdicts,
        pass,
    })
}
