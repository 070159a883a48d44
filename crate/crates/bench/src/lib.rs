//! Criterion benchmarks for the prime engine and the arithmetic layer.
//! Run with `cargo bench -p primorial-gap-bench`.
