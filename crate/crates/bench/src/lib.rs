//! Bench-only crate; see `benches/main.rs`.
