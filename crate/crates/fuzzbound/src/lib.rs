//! Space files, audit reports and the `fuzzbound` command line, on top of
//! [`fuzzbound_core`].

pub mod cli;
pub mod parallel;
pub mod report;
pub mod spacefile;

pub use spacefile::{render, ParseError, SpaceFile};
