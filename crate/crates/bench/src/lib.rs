//! Benchmark-only crate; see `benches/kepler.rs`.
