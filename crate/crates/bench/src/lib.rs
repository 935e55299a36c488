//! Benchmark-only crate; see `benches/engine.rs` for the criterion targets.
