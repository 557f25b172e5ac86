//! Library side of the `symb` command: definition files, subcommands and
//! the repro suite.

pub mod commands;
pub mod repro;
pub mod session;

use symbpow::{Error, ErrorClass};

/// Exit status for a failed command.
pub fn exit_code(e: &Error) -> i32 {
    match e.class() {
        ErrorClass::Refusal => 1,
        ErrorClass::Input => 2,
        ErrorClass::Internal => 3,
    }
}
