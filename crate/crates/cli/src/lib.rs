//! File formats and verification suites behind the `polyrec` binary.

pub mod formats;
pub mod suites;
