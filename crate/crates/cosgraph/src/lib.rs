//! File formats, the bundled example catalog, JSON reports and the
//! `cosgraph` command line, on top of [`cosgraph_core`].

pub mod bundled;
pub mod cli;
pub mod commands;
pub mod error;
pub mod format;
pub mod report;

pub use cli::run;
pub use commands::Caps;
pub use error::{exit, CliError, Result};
pub use report::{OutputMode, Overall, VerificationReport};

pub use cosgraph_core;
