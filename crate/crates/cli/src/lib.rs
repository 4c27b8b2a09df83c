//! Problem files, rendering, corpus generation, and command dispatch for
//! the `mingb` tool.

pub mod gen;
pub mod parse;
pub mod problem;
pub mod render;
pub mod report;
pub mod run;

pub use parse::{parse_problem, ParseError};
pub use problem::{ordering_by_name, ordering_name, ProblemFile};
