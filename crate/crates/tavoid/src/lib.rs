//! File formats, parallel profiling and the `tavoid` command line, on top
//! of [`tavoid_core`].

pub mod cli;
pub mod codefile;
pub mod error;
pub mod output;
pub mod parallel;
pub mod polyexpr;

pub use codefile::CodeFile;
pub use error::CliError;
pub use polyexpr::PolyExpr;
