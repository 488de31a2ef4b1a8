//! Criterion benchmarks for the model crate; see `benches/`.
//!
//! Run with `cargo bench -p darkex-bench`.
