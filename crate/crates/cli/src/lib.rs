//! Library side of the `modpoly` command: argument grammar, job runners,
//! atlas sweeps and output formatting.

pub mod args;
pub mod atlas;
pub mod output;
pub mod run;
