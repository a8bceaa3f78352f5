//! Benchmark-only crate; see the `benches/` directory. Nothing to export.
