//! File formats, parallel table computation, invariant sweeps and the
//! command-line front end for `mixwalk-core`.

pub mod checkpoint;
pub mod cli;
pub mod error;
pub mod input;
pub mod render;
pub mod tables;
pub mod verify;

pub use error::{CliError, ParseError, Result};
