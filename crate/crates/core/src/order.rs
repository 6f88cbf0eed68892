use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An even order `n >= 2`, the side length of the squares under study.
///
/// Orders are kept in a `u32`; every routine that does arithmetic on symbols
/// widens to `u64`/`i64` first, so orders up to `u32::MAX` are representable
/// even though only profile-level checks are practical at the top of that
/// range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Order(u32);

impl Order {
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::OrderTooSmall { n });
        }
        if !n.is_multiple_of(2) {
            return Err(Error::OddOrder { n });
        }
        Ok(Order(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// `n/2`, the distinguished difference that appears twice.
    pub fn half(self) -> u32 {
        self.0 / 2
    }

    pub fn as_usize(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Residue class of orders for which column triples are constructed.
///
/// Each tag names the congruence class `48k + r`; all four residues are
/// `2 (mod 4)`, the orders where three pairwise nearly orthogonal squares
/// are the interesting first case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    R14,
    R22,
    R38,
    R46,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 4] = [
        FamilyTag::R14,
        FamilyTag::R22,
        FamilyTag::R38,
        FamilyTag::R46,
    ];

    /// The residue `r` in `n = 48k + r`.
    pub fn residue(self) -> u32 {
        match self {
            FamilyTag::R14 => 14,
            FamilyTag::R22 => 22,
            FamilyTag::R38 => 38,
            FamilyTag::R46 => 46,
        }
    }

    pub fn of_residue(r: u32) -> Option<Self> {
        match r {
            14 => Some(FamilyTag::R14),
            22 => Some(FamilyTag::R22),
            38 => Some(FamilyTag::R38),
            46 => Some(FamilyTag::R46),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "48k+{}", self.residue())
    }
}

impl FromStr for FamilyTag {
    type Err = String;

    /// Accepts either the full class name (`"48k+14"`) or the bare
    /// residue (`"14"`).
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let residue = s.strip_prefix("48k+").unwrap_or(s);
        residue
            .parse::<u32>()
            .ok()
            .and_then(FamilyTag::of_residue)
            .ok_or_else(|| format!("unknown family {s:?}; expected 48k+14, 48k+22, 48k+38, or 48k+46"))
    }
}

/// A concrete member of a residue class: the order `n = 48k + r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyId {
    tag: FamilyTag,
    k: u32,
}

impl FamilyId {
    /// Largest `k` for which `48k + 46` still fits in a `u32`.
    pub const MAX_K: u32 = (u32::MAX - 46) / 48;

    pub fn new(tag: FamilyTag, k: u32) -> Result<Self> {
        if k > Self::MAX_K {
            return Err(Error::ParameterTooLarge {
                k: k as u64,
                max_k: Self::MAX_K as u64,
            });
        }
        Ok(FamilyId { tag, k })
    }

    /// Recognizes the residue class of `n`, if any covers it.
    pub fn of_order(n: u32) -> Option<Self> {
        let tag = FamilyTag::of_residue(n % 48)?;
        Some(FamilyId {
            tag,
            k: n / 48,
        })
    }

    pub fn tag(self) -> FamilyTag {
        self.tag
    }

    pub fn k(self) -> u32 {
        self.k
    }

    pub fn order(self) -> Order {
        // Cannot overflow thanks to the MAX_K check in `new`, and the result
        // is even and >= 14, so the Order invariants hold by construction.
        Order(48 * self.k + self.tag.residue())
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (k = {}, n = {})", self.tag, self.k, self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_rejects_odd_and_tiny() {
        assert_eq!(Order::new(7), Err(Error::OddOrder { n: 7 }));
        assert_eq!(Order::new(0), Err(Error::OrderTooSmall { n: 0 }));
        assert_eq!(Order::new(1), Err(Error::OrderTooSmall { n: 1 }));
        assert_eq!(Order::new(2).unwrap().half(), 1);
        assert_eq!(Order::new(14).unwrap().half(), 7);
    }

    #[test]
    fn family_orders_match_definition() {
        let f = FamilyId::new(FamilyTag::R14, 0).unwrap();
        assert_eq!(f.order().get(), 14);
        let f = FamilyId::new(FamilyTag::R46, 2).unwrap();
        assert_eq!(f.order().get(), 142);
        let f = FamilyId::new(FamilyTag::R22, 1_000_000).unwrap();
        assert_eq!(f.order().get(), 48_000_022);
    }

    #[test]
    fn of_order_inverts_order() {
        for tag in FamilyTag::ALL {
            for k in [0u32, 1, 2, 17, 9999] {
                let f = FamilyId::new(tag, k).unwrap();
                assert_eq!(FamilyId::of_order(f.order().get()), Some(f));
            }
        }
        assert_eq!(FamilyId::of_order(16), None);
        assert_eq!(FamilyId::of_order(15), None);
        assert_eq!(FamilyId::of_order(48), None);
    }

    #[test]
    fn max_k_is_tight() {
        assert!(FamilyId::new(FamilyTag::R46, FamilyId::MAX_K).is_ok());
        assert!(FamilyId::new(FamilyTag::R46, FamilyId::MAX_K + 1).is_err());
        let top = FamilyId::new(FamilyTag::R46, FamilyId::MAX_K).unwrap();
        // 48 * MAX_K + 46 must not wrap.
        assert!(top.order().get() >= 46);
    }

    #[test]
    fn tag_parses_both_spellings() {
        assert_eq!("48k+14".parse::<FamilyTag>(), Ok(FamilyTag::R14));
        assert_eq!("38".parse::<FamilyTag>(), Ok(FamilyTag::R38));
        assert!("48k+15".parse::<FamilyTag>().is_err());
        assert!("".parse::<FamilyTag>().is_err());
    }
}
