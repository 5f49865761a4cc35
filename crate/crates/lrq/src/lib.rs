//! Command line, file formats and parallel sweeps on top of [`lrq_core`].

pub mod cache;
pub mod cli;
pub mod error;
pub mod json;
pub mod verify;

pub use error::CliError;

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_IO: u8 = 3;
