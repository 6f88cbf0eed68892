//! On-disk artifact documents: a single JSON object per file with a small
//! kind-tagged envelope, shared by every subcommand that reads or writes
//! structured output.

use std::fs;
use std::io;
use std::path::Path;

use mnols_core::FamilyTag;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// What the payload of a document describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DocKind {
    Columns,
    Square,
    Profile,
    Report,
    Search,
}

/// The envelope common to all artifact files.
///
/// `n`, `family`, and `k` are context fields; which ones are required
/// depends on `kind` (see [`ArtifactDocument::validate`]).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArtifactDocument {
    pub schema_version: u32,
    pub kind: DocKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    pub payload: Payload,
}

/// Kind-specific document bodies.
///
/// Serialized untagged — the envelope's `kind` is the discriminant — so
/// every variant carries at least one required field unique to it, and
/// unknown fields are rejected to keep the match unambiguous.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    Search(SearchPayload),
    Profile(ProfilePayload),
    Report(ReportPayload),
    Square(SquarePayload),
    Columns(ColumnsPayload),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColumnsPayload {
    pub columns: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SquarePayload {
    pub squares: Vec<Vec<Vec<u32>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfilePayload {
    /// 1-based positions in the triple, e.g. `[2, 3]`: differences are
    /// taken as `second - first` per row.
    pub pair: [u8; 2],
    pub differences: Vec<u32>,
    pub counts: Vec<u32>,
    pub quasi_difference: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportPayload {
    /// "profile" or "full".
    pub mode: String,
    pub results: Vec<ReportEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportEntry {
    pub family: Option<String>,
    pub k: Option<u32>,
    pub n: u32,
    pub pass: bool,
    pub columns_are_permutations: bool,
    pub columns_have_reflection: bool,
    /// Per pair, ordered by (later column, earlier column) index.
    pub pair_profiles_ok: Vec<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub squares_are_latin: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub full_pairs_ok: Option<Vec<bool>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchPayload {
    pub t: u32,
    pub found: bool,
    pub nodes_expanded: u64,
    pub exhausted: bool,
    /// "nodes" or "time" when a budget ran out.
    pub budget_hit: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub columns: Option<Vec<Vec<u32>>>,
}

impl ArtifactDocument {
    /// Structural consistency of the envelope and payload: version, kind
    /// against payload shape, and the context fields against the data.
    pub fn validate(&self) -> Result<(), String> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(format!(
                "unsupported schema_version {} (expected {})",
                self.schema_version, SCHEMA_VERSION
            ));
        }
        let kind_matches = matches!(
            (self.kind, &self.payload),
            (DocKind::Columns, Payload::Columns(_))
                | (DocKind::Square, Payload::Square(_))
                | (DocKind::Profile, Payload::Profile(_))
                | (DocKind::Report, Payload::Report(_))
                | (DocKind::Search, Payload::Search(_))
        );
        if !kind_matches {
            return Err(format!("kind {:?} does not match the payload shape", self.kind));
        }
        if let Some(family) = &self.family {
            let tag: FamilyTag = family.parse()?;
            if let (Some(k), Some(n)) = (self.k, self.n) {
                let expected = 48u64 * k as u64 + tag.residue() as u64;
                if expected != n as u64 {
                    return Err(format!(
                        "family {family} with k = {k} implies n = {expected}, but n = {n}"
                    ));
                }
            }
        }
        match &self.payload {
            Payload::Columns(p) => {
                let n = self.require_n()?;
                check_columns(&p.columns, n)?;
            }
            Payload::Square(p) => {
                let n = self.require_n()?;
                for (s, square) in p.squares.iter().enumerate() {
                    if square.len() != n as usize {
                        return Err(format!("square {s} has {} rows, expected {n}", square.len()));
                    }
                    for (r, row) in square.iter().enumerate() {
                        if row.len() != n as usize {
                            return Err(format!(
                                "square {s} row {r} has {} entries, expected {n}",
                                row.len()
                            ));
                        }
                        if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                            return Err(format!("square {s} row {r} holds symbol {bad} >= {n}"));
                        }
                    }
                }
            }
            Payload::Profile(p) => {
                let n = self.require_n()?;
                let [a, b] = p.pair;
                if !(1..=3).contains(&a) || !(1..=3).contains(&b) || a == b {
                    return Err(format!("pair [{a}, {b}] must be two distinct positions in 1..=3"));
                }
                if p.differences.len() != n as usize {
                    return Err(format!(
                        "{} differences for order {n}",
                        p.differences.len()
                    ));
                }
                if p.counts.len() != n as usize {
                    return Err(format!("{} counts for order {n}", p.counts.len()));
                }
                let total: u64 = p.counts.iter().map(|&c| c as u64).sum();
                if total != n as u64 {
                    return Err(format!("profile counts sum to {total}, expected {n}"));
                }
            }
            Payload::Report(p) => {
                if p.mode != "profile" && p.mode != "full" {
                    return Err(format!("unknown report mode {:?}", p.mode));
                }
                for entry in &p.results {
                    if let Some(family) = &entry.family {
                        family.parse::<FamilyTag>()?;
                    }
                }
            }
            Payload::Search(p) => {
                let n = self.require_n()?;
                if p.found != p.columns.is_some() {
                    return Err("found flag disagrees with presence of columns".to_string());
                }
                if let Some(columns) = &p.columns {
                    check_columns(columns, n)?;
                }
            }
        }
        Ok(())
    }

    fn require_n(&self) -> Result<u32, String> {
        self.n
            .ok_or_else(|| format!("kind {:?} requires the n field", self.kind))
    }
}

fn check_columns(columns: &[Vec<u32>], n: u32) -> Result<(), String> {
    for (i, column) in columns.iter().enumerate() {
        if column.len() != n as usize {
            return Err(format!(
                "column {i} has length {}, expected {n}",
                column.len()
            ));
        }
        if let Some(&bad) = column.iter().find(|&&v| v >= n) {
            return Err(format!("column {i} holds symbol {bad} >= {n}"));
        }
    }
    Ok(())
}

/// Parses and validates a document file. The error string distinguishes
/// unreadable, unparsable, and structurally invalid files.
pub fn read_document(path: &Path) -> Result<ArtifactDocument, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let doc: ArtifactDocument = serde_json::from_str(&text)
        .map_err(|e| format!("{} is not a valid artifact document: {e}", path.display()))?;
    doc.validate()
        .map_err(|e| format!("{} is structurally invalid: {e}", path.display()))?;
    Ok(doc)
}

/// Writes a document as pretty-printed JSON.
pub fn write_document(doc: &ArtifactDocument, path: &Path) -> io::Result<()> {
    let mut text = serde_json::to_string_pretty(doc)
        .expect("document serialization cannot fail");
    text.push('\n');
    fs::write(path, text)
}
