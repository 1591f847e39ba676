//! Command-line front end for the ptosc verification suites.

pub mod config;
pub mod export;
pub mod report;
pub mod suites;
