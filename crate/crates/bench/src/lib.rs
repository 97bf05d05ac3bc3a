//! Benchmarks live under `benches/`; run them with `cargo bench -p t2md-bench`.
