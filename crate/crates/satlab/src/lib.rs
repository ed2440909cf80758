//! File formats, reports, parallel search and verification suites for the
//! `satlab` command-line tool.

pub mod family_spec;
pub mod graph6;
pub mod oscillation;
pub mod parallel;
pub mod report;
pub mod verify;

/// Exhaustive order cap, from `SATLAB_MAX_N` when set.
pub fn exhaustive_cap() -> usize {
    std::env::var("SATLAB_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(satlab_core::search::DEFAULT_CAP)
}
