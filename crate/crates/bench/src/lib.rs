//! Benchmarks for the mcg-core kernels; see `benches/kernels.rs`.
