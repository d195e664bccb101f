//! Script front-end for primary decomposition: parsing, execution and
//! deterministic text or JSON rendering.

pub mod report;
pub mod run;
pub mod script;

pub use report::{compare_all, parse_expected, CommandReport, ComponentJson, ValidationJson};
pub use run::{
    render_json, run, run_file, validate_file, RunOptions, RunOutcome, EXIT_COMPUTE, EXIT_MISMATCH,
    EXIT_OK, EXIT_USAGE,
};
pub use script::{parse, Command, CommandKind, ParseError, Script, Statement};
