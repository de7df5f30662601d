//! Criterion benchmarks for cgfib-core live under `benches/`.
