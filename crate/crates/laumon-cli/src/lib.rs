//! Command-line driver for `laumon-core`: JSON formats, configuration files
//! and the parallel verification suites.

pub mod commands;
pub mod config;
pub mod formats;
pub mod suites;
