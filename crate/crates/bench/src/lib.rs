//! Benchmark-only crate: no library surface. The measured kernels live in
//! `benches/kernels.rs`.
