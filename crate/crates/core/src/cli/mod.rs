//! Command-line front end and file formats.

pub mod format;
pub mod commands;
