//! Command-line front end, JSON and text formats, and parallel sweeps for
//! [`eqmeas_core`].

pub mod cli;
pub mod format;
pub mod sweep;

pub use cli::run;
