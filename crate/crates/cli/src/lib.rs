//! Library side of the CLI: command implementations, figure rendering, and
//! deterministic JSON/CSV/SVG emission. The binary in `main.rs` is a thin
//! argument-parsing layer over this.

pub mod commands;
pub mod figures;
pub mod output;
