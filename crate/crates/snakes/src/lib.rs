//! Command-line front end, JSON/CSV formats and parallel verification sweeps
//! built on `snakes-core`.

pub mod cli;
pub mod error;
pub mod grammar;
pub mod json;
pub mod render;
pub mod report;
pub mod suite;

pub use cli::run;
pub use error::CliError;
