//! Shared helpers for the benchmark targets live in the benches themselves;
//! this crate exists to host them inside the workspace.
