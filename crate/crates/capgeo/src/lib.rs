//! File formats and the command-line front end for `capgeo-core`.

pub mod cli;
pub mod error;
pub mod json;
pub mod svg;

pub use error::CliError;
