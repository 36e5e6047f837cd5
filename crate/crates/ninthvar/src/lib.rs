//! File formats and the command-line driver for `ninthvar-core`: polynomial,
//! sequence-spec, report and batch-manifest JSON, and the `ninthvar` binary.

pub mod batch;
pub mod cli;
pub mod error;
pub mod json;
pub mod spec;
pub mod text;

pub use error::{CliError, CliResult};
