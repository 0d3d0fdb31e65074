//! Criterion benchmarks for the series and array kernels; see `benches/`.
