//! Library side of the `quadsq` command-line tool.

pub mod app;
pub mod input;
pub mod render;
pub mod report;

pub use app::{run, EXIT_GEOMETRY, EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION};
