//! File formats and report assembly behind the `clockshift` binary,
//! exposed as a library so integration tests can exercise the exact
//! serialization the tool ships.

pub mod formats;
pub mod reports;
