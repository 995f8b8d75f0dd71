//! File formats, a parallel candidate scanner and the `gwalk` command line
//! on top of `gwalk-core`.

pub mod cli;
pub mod format;
pub mod scan;

pub use scan::Parallel;
