//! Library side of the `normtop` binary: group document ingestion, DOT
//! export, and batch run orchestration. Split out so integration tests can
//! exercise the pipeline without spawning the binary.

pub mod document;
pub mod dot;
pub mod run;

pub use document::{parse_group_document, GroupDocument};
pub use run::{run, EmitKind, RunConfig};
