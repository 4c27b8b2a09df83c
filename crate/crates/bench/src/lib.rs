//! Shared instance builders for the benchmark targets.
