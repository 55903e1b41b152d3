//! Criterion benchmarks for the graph pipeline live in `benches/`.
//!
//! Run with `cargo bench -p divgraph-bench`.
