//! Command-line front end: sequence specifications, file formats, renderings
//! and the parallel k-bonacci tables.

pub mod batch;
pub mod cli;
pub mod error;
pub mod input;
pub mod render;

pub use batch::{run_table, BatchEntry, BatchError, BatchReport, Params, TableKind};
pub use cli::run;
pub use error::CliError;
pub use render::OutputFormat;
