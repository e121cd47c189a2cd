//! File formats, parallel sweeps, verification suites and the command-line
//! front end for [`veronese_core`].

pub mod cli;
pub mod schema;
pub mod sweep;
pub mod verify;
