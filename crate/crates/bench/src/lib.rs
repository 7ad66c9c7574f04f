//! Benchmarks for fepkit; see `benches/`.
