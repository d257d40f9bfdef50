//! Library surface of the `lsab` command-line tool: the `.lsab` document
//! format (parse/emit) and the command runner. The binary in `main.rs` is a
//! thin wrapper so tests and fuzz targets can drive everything in-process.

#![forbid(unsafe_code)]

pub mod commands;
pub mod doc;
pub mod report_json;

pub use commands::{run, Cli};
pub use doc::{emit_document, parse_document, DocError, Document, ObjectValue};
