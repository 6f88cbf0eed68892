//! The five subcommands and the argument parsing they share.
//!
//! Every command prints a human-readable summary to stdout by default;
//! `--format json` prints the same artifact document that `--output`
//! writes. `--output` always receives canonical JSON regardless of the
//! stdout format. Exit codes: 0 success, 1 verification failure (including
//! unusable artifact files and definitively failed searches), 2 bad usage
//! or unsupported request, 3 search budget exhausted.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use mnols_core::{
    build_triple, check_near_orthogonal, develop, difference_profile, find_cyclic_mnols,
    has_reflection, is_latin, is_quasi_difference, mnols_bound, verify_triple, BudgetHit,
    ColumnVector, Error as CoreError, FamilyId, FamilyTag, Order, SearchBudget, SearchOptions,
    Triple, VerificationReport, VerifyMode, DEFAULT_FULL_CEILING,
};
use rayon::prelude::*;
use thiserror::Error;

use crate::doc::{
    read_document, write_document, ArtifactDocument, ColumnsPayload, DocKind, Payload,
    ProfilePayload, ReportEntry, ReportPayload, SearchPayload, SquarePayload, SCHEMA_VERSION,
};

/// Command-line error carrying its process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments or a request outside what the tool supports: exit 2.
    #[error("{0}")]
    Usage(String),
    /// A verification that ran to completion and failed, or an artifact
    /// that could not be trusted: exit 1.
    #[error("{0}")]
    Failed(String),
    /// A search stopped by its node or time budget: exit 3.
    #[error("{0}")]
    BudgetExhausted(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
            CliError::BudgetExhausted(_) => 3,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            // Can only arise from a bug in the construction tables; surface
            // it as a failed verification, not a usage problem.
            CoreError::ConstructionCheckFailed { .. } => CliError::Failed(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "mnols",
    version,
    about = "Construct, verify, and search for cyclic mutually nearly orthogonal Latin squares"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the closed-form column triple of a family member
    Gen(GenArgs),
    /// Verify constructed triples over a k-range, or a columns artifact
    Verify(VerifyArgs),
    /// Search for t pairwise compatible columns by backtracking
    Search(SearchArgs),
    /// Print the upper bound on the size of an MNOLS set of even order n
    Bound(BoundArgs),
    /// Print the row differences and profile of one column pair of a triple
    Qds(QdsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Key=value summary lines
    Text,
    /// The artifact document as JSON
    Json,
    /// Square rows as CSV (gen --develop only)
    Csv,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Family: 48k+14, 48k+22, 48k+38, or 48k+46 (bare residue accepted)
    #[arg(long)]
    pub family: String,
    /// Member index k within the family (n = 48k + residue)
    #[arg(long)]
    pub k: u32,
    /// Also develop the three columns into full n x n squares
    #[arg(long)]
    pub develop: bool,
    /// Write the artifact document (JSON) to this path
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Family to verify, or "all" (required unless --input is given)
    #[arg(long)]
    pub family: Option<String>,
    /// Member index or inclusive range, e.g. "3" or "0..200"
    #[arg(long)]
    pub k: Option<String>,
    /// Verify the columns in an artifact file instead of constructing
    #[arg(long, conflicts_with_all = ["family", "k"])]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ModeArg::Profile)]
    pub mode: ModeArg,
    /// Largest order accepted in full mode
    #[arg(long, default_value_t = DEFAULT_FULL_CEILING)]
    pub full_ceiling: u32,
    /// Worker threads for ranges (1 = sequential; output order is fixed)
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Write the report document (JSON) to this path
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    /// O(n) difference-profile checks
    Profile,
    /// Develop the squares and check every ordered pair count
    Full,
}

impl ModeArg {
    fn to_core(self) -> VerifyMode {
        match self {
            ModeArg::Profile => VerifyMode::Profile,
            ModeArg::Full => VerifyMode::Full,
        }
    }

    fn name(self) -> &'static str {
        match self {
            ModeArg::Profile => "profile",
            ModeArg::Full => "full",
        }
    }
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Even order of the squares
    #[arg(long)]
    pub n: u32,
    /// Number of pairwise compatible columns to look for (identity included)
    #[arg(long)]
    pub t: u32,
    /// Node budget: accepted row assignments before giving up
    #[arg(long, default_value_t = 100_000_000)]
    pub max_nodes: u64,
    /// Wall-clock budget in milliseconds
    #[arg(long)]
    pub time_limit_ms: Option<u64>,
    /// Only consider columns with the reflection property (halves the depth)
    #[arg(long)]
    pub reflection: bool,
    /// Write the search document (JSON) to this path
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    /// Even order of the squares
    #[arg(long)]
    pub n: u32,
}

#[derive(Debug, Args)]
pub struct QdsArgs {
    /// Family: 48k+14, 48k+22, 48k+38, or 48k+46 (bare residue accepted)
    #[arg(long)]
    pub family: String,
    /// Member index k within the family
    #[arg(long)]
    pub k: u32,
    /// Ordered pair of 1-based triple positions, e.g. "2,3" for C3 - C2
    #[arg(long)]
    pub pair: String,
    /// Write the profile document (JSON) to this path
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Search(args) => cmd_search(args),
        Command::Bound(args) => cmd_bound(args),
        Command::Qds(args) => cmd_qds(args),
    }
}

fn parse_family_tag(s: &str) -> Result<FamilyTag, CliError> {
    s.parse::<FamilyTag>().map_err(CliError::Usage)
}

fn parse_family_id(family: &str, k: u32) -> Result<FamilyId, CliError> {
    let tag = parse_family_tag(family)?;
    Ok(FamilyId::new(tag, k)?)
}

/// Parses "a", "a..b", or "a..=b" as an inclusive range.
fn parse_k_range(s: &str) -> Result<(u32, u32), CliError> {
    let bad = || CliError::Usage(format!("invalid k range {s:?}; expected e.g. \"3\" or \"0..200\" (inclusive)"));
    if let Some((lo, hi)) = s.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
        let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        Ok((lo, hi))
    } else {
        let k: u32 = s.trim().parse().map_err(|_| bad())?;
        Ok((k, k))
    }
}

fn parse_pair(s: &str) -> Result<(u8, u8), CliError> {
    let bad = || {
        CliError::Usage(format!(
            "invalid pair {s:?}; expected two distinct positions from 1..=3, e.g. \"2,3\""
        ))
    };
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let a: u8 = a.trim().parse().map_err(|_| bad())?;
    let b: u8 = b.trim().parse().map_err(|_| bad())?;
    if !(1..=3).contains(&a) || !(1..=3).contains(&b) || a == b {
        return Err(bad());
    }
    Ok((a, b))
}

fn emit_document(
    doc: &ArtifactDocument,
    format: OutputFormat,
    output: Option<&Path>,
) -> Result<(), CliError> {
    if format == OutputFormat::Json {
        let text = serde_json::to_string_pretty(doc).expect("document serialization cannot fail");
        println!("{text}");
    }
    if let Some(path) = output {
        write_document(doc, path)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn join<T: std::fmt::Display>(values: impl IntoIterator<Item = T>) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn base_doc(kind: DocKind, family: Option<FamilyId>, payload: Payload) -> ArtifactDocument {
    ArtifactDocument {
        schema_version: SCHEMA_VERSION,
        kind,
        n: family.map(|f| f.order().get()),
        family: family.map(|f| f.tag().to_string()),
        k: family.map(|f| f.k()),
        payload,
    }
}

pub fn cmd_gen(args: GenArgs) -> Result<(), CliError> {
    let family = parse_family_id(&args.family, args.k)?;
    if args.format == OutputFormat::Csv && !args.develop {
        return Err(CliError::Usage(
            "csv output dumps square rows and requires --develop".to_string(),
        ));
    }
    let triple = build_triple(family)?;
    let n = triple.order().get();

    let squares = if args.develop {
        let mut squares = Vec::with_capacity(3);
        for column in triple.columns() {
            squares.push(develop(column)?);
        }
        Some(squares)
    } else {
        None
    };

    let doc = match &squares {
        Some(squares) => base_doc(
            DocKind::Square,
            Some(family),
            Payload::Square(SquarePayload {
                squares: squares
                    .iter()
                    .map(|sq| sq.rows().map(|r| r.to_vec()).collect())
                    .collect(),
            }),
        ),
        None => base_doc(
            DocKind::Columns,
            Some(family),
            Payload::Columns(ColumnsPayload {
                columns: triple
                    .columns()
                    .iter()
                    .map(|c| c.values().to_vec())
                    .collect(),
            }),
        ),
    };

    match args.format {
        OutputFormat::Text => {
            println!("family={} k={} n={n}", family.tag(), family.k());
            for (i, column) in triple.columns().iter().enumerate() {
                println!("c{}={}", i + 1, join(column.values().iter()));
            }
            if let Some(squares) = &squares {
                for (s, square) in squares.iter().enumerate() {
                    println!("square {}:", s + 1);
                    for row in square.rows() {
                        println!(
                            "{}",
                            row.iter()
                                .map(|v| v.to_string())
                                .collect::<Vec<_>>()
                                .join(" ")
                        );
                    }
                }
            }
        }
        OutputFormat::Csv => {
            let squares = squares.as_ref().expect("checked above");
            for (s, square) in squares.iter().enumerate() {
                for (r, row) in square.rows().enumerate() {
                    println!("{},{},{}", s + 1, r, join(row.iter()));
                }
            }
        }
        OutputFormat::Json => {}
    }
    emit_document(&doc, args.format, args.output.as_deref())
}

/// What one verified member contributes to the report.
fn entry_from_report(report: &VerificationReport) -> ReportEntry {
    ReportEntry {
        family: Some(report.family.tag().to_string()),
        k: Some(report.family.k()),
        n: report.n,
        pass: report.pass,
        columns_are_permutations: report.column_is_permutation.iter().all(|&b| b),
        columns_have_reflection: report.column_has_reflection.iter().all(|&b| b),
        pair_profiles_ok: report.pair_profile_ok.to_vec(),
        squares_are_latin: report.square_is_latin.map(|l| l.iter().all(|&b| b)),
        full_pairs_ok: report
            .pair_verdicts
            .as_ref()
            .map(|vs| vs.iter().map(|v| v.pass).collect()),
    }
}

fn print_entry(entry: &ReportEntry, mode: ModeArg) {
    let mut line = String::new();
    if let (Some(family), Some(k)) = (&entry.family, entry.k) {
        line.push_str(&format!("family={family} k={k} "));
    }
    line.push_str(&format!(
        "n={} mode={} pass={} permutations={} reflection={} profiles={}",
        entry.n,
        mode.name(),
        entry.pass,
        entry.columns_are_permutations,
        entry.columns_have_reflection,
        join(entry.pair_profiles_ok.iter())
    ));
    if let Some(latin) = entry.squares_are_latin {
        line.push_str(&format!(" latin={latin}"));
    }
    if let Some(full) = &entry.full_pairs_ok {
        line.push_str(&format!(" full_pairs={}", join(full.iter())));
    }
    println!("{line}");
}

fn verify_one_member(
    tag: FamilyTag,
    k: u32,
    mode: ModeArg,
    full_ceiling: u32,
) -> Result<ReportEntry, CliError> {
    let family = FamilyId::new(tag, k)?;
    let triple = build_triple(family)?;
    let report = verify_triple(&triple, mode.to_core(), full_ceiling)?;
    Ok(entry_from_report(&report))
}

fn cmd_verify_members(args: &VerifyArgs) -> Result<(), CliError> {
    let family = args.family.as_deref().ok_or_else(|| {
        CliError::Usage("verify needs --family and --k, or --input".to_string())
    })?;
    let k_spec = args
        .k
        .as_deref()
        .ok_or_else(|| CliError::Usage("verify needs --k (e.g. \"0\" or \"0..200\")".to_string()))?;
    let (k_lo, k_hi) = parse_k_range(k_spec)?;
    let tags: Vec<FamilyTag> = if family.eq_ignore_ascii_case("all") {
        FamilyTag::ALL.to_vec()
    } else {
        vec![parse_family_tag(family)?]
    };

    // Fixed member order: by family residue, then by k.
    let members: Vec<(FamilyTag, u32)> = tags
        .iter()
        .flat_map(|&tag| (k_lo..=k_hi).map(move |k| (tag, k)))
        .collect();

    let entries: Vec<ReportEntry> = if args.jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".to_string()));
    } else if args.jobs == 1 {
        members
            .iter()
            .map(|&(tag, k)| verify_one_member(tag, k, args.mode, args.full_ceiling))
            .collect::<Result<_, _>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(args.jobs)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot build thread pool: {e}")))?;
        pool.install(|| {
            members
                .par_iter()
                .map(|&(tag, k)| verify_one_member(tag, k, args.mode, args.full_ceiling))
                .collect::<Result<_, _>>()
        })?
    };

    for entry in &entries {
        if args.format == OutputFormat::Text {
            print_entry(entry, args.mode);
        }
    }
    let failed = entries.iter().filter(|e| !e.pass).count();
    let doc = ArtifactDocument {
        schema_version: SCHEMA_VERSION,
        kind: DocKind::Report,
        n: None,
        family: None,
        k: None,
        payload: Payload::Report(ReportPayload {
            mode: args.mode.name().to_string(),
            results: entries,
        }),
    };
    emit_document(&doc, args.format, args.output.as_deref())?;
    if failed > 0 {
        return Err(CliError::Failed(format!(
            "{failed} of {} members failed verification",
            members.len()
        )));
    }
    Ok(())
}

/// Converts an artifact error into the exit-1 flavor: a file that cannot be
/// read, parsed, or trusted is a verification failure, not a usage error.
fn artifact_failed(msg: String) -> CliError {
    CliError::Failed(msg)
}

fn cmd_verify_input(args: &VerifyArgs, path: &Path) -> Result<(), CliError> {
    let doc = read_document(path).map_err(artifact_failed)?;
    let column_data: &[Vec<u32>] = match (&doc.kind, &doc.payload) {
        (DocKind::Columns, Payload::Columns(p)) => &p.columns,
        (DocKind::Search, Payload::Search(p)) => match &p.columns {
            Some(columns) => columns,
            None => {
                return Err(artifact_failed(format!(
                    "{} holds a search document without columns",
                    path.display()
                )))
            }
        },
        _ => {
            return Err(CliError::Usage(format!(
                "{} holds a {:?} document; verify --input needs columns or search",
                path.display(),
                doc.kind
            )))
        }
    };
    if column_data.is_empty() {
        return Err(artifact_failed(format!(
            "{} holds no columns to verify",
            path.display()
        )));
    }

    let columns: Vec<ColumnVector> = column_data
        .iter()
        .map(|values| ColumnVector::new(values.clone()))
        .collect::<Result<_, _>>()
        .map_err(|e| artifact_failed(format!("{}: {e}", path.display())))?;
    let n = columns[0].n();

    let permutations: Vec<bool> = columns.iter().map(|c| c.is_permutation()).collect();
    let reflections: Vec<bool> = columns.iter().map(has_reflection).collect();

    // Pairs ordered by (later, earlier); for three columns this matches the
    // triple pair order used elsewhere.
    let mut pair_profiles_ok = Vec::new();
    for later in 1..columns.len() {
        for earlier in 0..later {
            let profile = difference_profile(&columns[later], &columns[earlier])
                .map_err(|e| artifact_failed(format!("{}: {e}", path.display())))?;
            pair_profiles_ok.push(is_quasi_difference(&profile));
        }
    }

    let mut squares_are_latin = None;
    let mut full_pairs_ok = None;
    if args.mode == ModeArg::Full {
        if n > args.full_ceiling {
            return Err(CliError::from(CoreError::FullCheckTooLarge {
                n,
                ceiling: args.full_ceiling,
            }));
        }
        let mut squares = Vec::with_capacity(columns.len());
        let mut latin = true;
        for column in &columns {
            // A non-permutation column cannot be developed; report it as a
            // failed Latin check rather than erroring out.
            if !column.is_permutation() {
                latin = false;
                continue;
            }
            let square = develop(column)?;
            latin &= is_latin(&square);
            squares.push(square);
        }
        let mut pair_pass = Vec::new();
        if squares.len() == columns.len() {
            for later in 1..squares.len() {
                for earlier in 0..later {
                    let verdict = check_near_orthogonal(&squares[earlier], &squares[later])?;
                    pair_pass.push(verdict.pass);
                }
            }
        } else {
            pair_pass = vec![false; pair_profiles_ok.len()];
        }
        squares_are_latin = Some(latin);
        full_pairs_ok = Some(pair_pass);
    }

    let pass = permutations.iter().all(|&b| b)
        && pair_profiles_ok.iter().all(|&b| b)
        && squares_are_latin.unwrap_or(true)
        && full_pairs_ok
            .as_ref()
            .is_none_or(|v| v.iter().all(|&b| b));

    let entry = ReportEntry {
        family: doc.family.clone(),
        k: doc.k,
        n,
        pass,
        columns_are_permutations: permutations.iter().all(|&b| b),
        columns_have_reflection: reflections.iter().all(|&b| b),
        pair_profiles_ok,
        squares_are_latin,
        full_pairs_ok,
    };
    if args.format == OutputFormat::Text {
        print_entry(&entry, args.mode);
    }
    let report = ArtifactDocument {
        schema_version: SCHEMA_VERSION,
        kind: DocKind::Report,
        n: None,
        family: None,
        k: None,
        payload: Payload::Report(ReportPayload {
            mode: args.mode.name().to_string(),
            results: vec![entry],
        }),
    };
    emit_document(&report, args.format, args.output.as_deref())?;
    if !pass {
        return Err(CliError::Failed(format!(
            "columns in {} failed verification",
            path.display()
        )));
    }
    Ok(())
}

pub fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    if args.format == OutputFormat::Csv {
        return Err(CliError::Usage(
            "csv output is only available for gen --develop".to_string(),
        ));
    }
    match args.input.clone() {
        Some(path) => cmd_verify_input(&args, &path),
        None => cmd_verify_members(&args),
    }
}

pub fn cmd_search(args: SearchArgs) -> Result<(), CliError> {
    if args.format == OutputFormat::Csv {
        return Err(CliError::Usage(
            "csv output is only available for gen --develop".to_string(),
        ));
    }
    let order = Order::new(args.n)?;
    let budget = SearchBudget {
        max_nodes: args.max_nodes,
        max_millis: args.time_limit_ms,
    };
    let options = SearchOptions {
        reflection: args.reflection,
    };
    let outcome = find_cyclic_mnols(order, args.t, &budget, options)?;

    let budget_hit = outcome.budget_hit.map(|hit| match hit {
        BudgetHit::Nodes => "nodes".to_string(),
        BudgetHit::Time => "time".to_string(),
    });
    if args.format == OutputFormat::Text {
        println!(
            "n={} t={} found={} nodes={} exhausted={} budget_hit={}",
            args.n,
            args.t,
            outcome.columns.is_some(),
            outcome.nodes_expanded,
            outcome.exhausted,
            budget_hit.as_deref().unwrap_or("none"),
        );
        if let Some(columns) = &outcome.columns {
            for (i, column) in columns.iter().enumerate() {
                println!("c{}={}", i + 1, join(column.values().iter()));
            }
        }
    }
    let doc = ArtifactDocument {
        schema_version: SCHEMA_VERSION,
        kind: DocKind::Search,
        n: Some(args.n),
        family: None,
        k: None,
        payload: Payload::Search(SearchPayload {
            t: args.t,
            found: outcome.columns.is_some(),
            nodes_expanded: outcome.nodes_expanded,
            exhausted: outcome.exhausted,
            budget_hit: budget_hit.clone(),
            columns: outcome
                .columns
                .as_ref()
                .map(|cols| cols.iter().map(|c| c.values().to_vec()).collect()),
        }),
    };
    emit_document(&doc, args.format, args.output.as_deref())?;

    if outcome.columns.is_some() {
        Ok(())
    } else if let Some(hit) = budget_hit {
        Err(CliError::BudgetExhausted(format!(
            "search stopped by its {hit} budget after {} nodes",
            outcome.nodes_expanded
        )))
    } else {
        Err(CliError::Failed(format!(
            "no set of {} columns exists at order {} (search space exhausted after {} nodes)",
            args.t, args.n, outcome.nodes_expanded
        )))
    }
}

pub fn cmd_bound(args: BoundArgs) -> Result<(), CliError> {
    let order = Order::new(args.n)?;
    println!("{}", mnols_bound(order));
    Ok(())
}

pub fn cmd_qds(args: QdsArgs) -> Result<(), CliError> {
    if args.format == OutputFormat::Csv {
        return Err(CliError::Usage(
            "csv output is only available for gen --develop".to_string(),
        ));
    }
    let family = parse_family_id(&args.family, args.k)?;
    let (a, b) = parse_pair(&args.pair)?;
    let triple = build_triple(family)?;
    let n = triple.order().get();
    let differences = pair_differences(&triple, a, b);
    let profile = difference_profile(
        triple.column(b as usize - 1),
        triple.column(a as usize - 1),
    )?;
    let quasi = is_quasi_difference(&profile);

    if args.format == OutputFormat::Text {
        println!(
            "family={} k={} n={n} pair={a},{b} quasi_difference={quasi}",
            family.tag(),
            family.k()
        );
        println!("differences={}", join(differences.iter()));
        println!("counts={}", join(profile.counts().iter()));
    }
    let doc = base_doc(
        DocKind::Profile,
        Some(family),
        Payload::Profile(ProfilePayload {
            pair: [a, b],
            differences,
            counts: profile.counts().to_vec(),
            quasi_difference: quasi,
        }),
    );
    emit_document(&doc, args.format, args.output.as_deref())?;
    if !quasi {
        return Err(CliError::Failed(format!(
            "pair {a},{b} of {} is not quasi-difference",
            family
        )));
    }
    Ok(())
}

/// Row differences `C_b(i) - C_a(i) (mod n)` of a triple's columns.
fn pair_differences(triple: &Triple, a: u8, b: u8) -> Vec<u32> {
    let n = triple.order().get();
    let ca = triple.column(a as usize - 1);
    let cb = triple.column(b as usize - 1);
    ca.iter()
        .zip(cb.iter())
        .map(|(&x, &y)| if y >= x { y - x } else { y + n - x })
        .collect()
}
