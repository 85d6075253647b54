//! Command-line drivers for `iflag`: document formats and the subcommand
//! implementations behind the `iflag` binary.

pub mod commands;
pub mod document;

pub use commands::{CliError, Format};
pub use document::{parse_facets, GraphDocument, VectorDocument};
