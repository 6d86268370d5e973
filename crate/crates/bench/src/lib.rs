//! Benchmark-only crate; the measurements live in `benches/zernike.rs`.
//!
//! Run with `cargo bench -p zcp-bench`.
