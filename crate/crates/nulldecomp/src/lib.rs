//! File formats, JSON reports, verification sweeps and worked-example
//! fixtures on top of `nulldecomp-core`.

pub mod checks;
pub mod fixtures;
pub mod formats;
pub mod report;

/// Environment variable overriding the oracle size limit.
pub const MAX_N_ENV: &str = "NULLDECOMP_MAX_N";

/// Oracle size limit from [`MAX_N_ENV`], clamped to what the oracles
/// support, or the default when unset or unparsable.
pub fn oracle_limit() -> usize {
    use nulldecomp_core::oracles::{DEFAULT_ORACLE_LIMIT, MAX_ORACLE_LIMIT};
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .map_or(DEFAULT_ORACLE_LIMIT, |n| n.min(MAX_ORACLE_LIMIT))
}
