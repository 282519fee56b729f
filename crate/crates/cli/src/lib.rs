//! Command line front end: argument definitions, command dispatch and the
//! JSON schemas of the reports.

pub mod args;
pub mod run;
pub mod schema;
