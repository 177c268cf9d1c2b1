//! Criterion benchmarks for `alcove-core`; see `benches/`.
