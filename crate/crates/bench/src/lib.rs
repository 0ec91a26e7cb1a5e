//! Criterion benchmarks for the search and construction routines; see `benches/`.
