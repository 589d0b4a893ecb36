//! Command-line front end for `loopalg-core`: a parser for class
//! expressions, the `loopalg` commands, and text, JSON and LaTeX output.

pub mod app;
pub mod output;
pub mod parse;

pub use app::run;
