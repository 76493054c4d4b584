//! Criterion benchmarks for the `modsym` crate live under `benches/`.
