//! Library half of the `mnols` command-line tool: the artifact document
//! model ([`doc`]) and the subcommand implementations ([`commands`]).
//!
//! The binary in `main.rs` only parses arguments and maps errors to exit
//! codes; everything it does lives here so it can be tested directly.

pub mod commands;
pub mod doc;

pub use commands::{run, Cli, CliError};
pub use doc::{read_document, write_document, ArtifactDocument, DocKind, Payload, SCHEMA_VERSION};
