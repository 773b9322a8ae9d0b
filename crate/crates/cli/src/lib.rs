//! Command-line front end for `toricnf-core`: input files, JSON and text
//! reports, and the runner for the bundled example corpus.

pub mod commands;
pub mod corpus;
pub mod error;
pub mod fixture;
pub mod input;
pub mod report;

pub use error::{CliError, Result};
pub use input::InputSpec;
