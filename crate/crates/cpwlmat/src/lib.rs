//! JSON file formats and the command-line driver for `cpwlmat-core`.

pub mod cli;
pub mod formats;
