//! Report structures and command implementations behind the `kv` binary.

pub mod commands;
pub mod report;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const INPUT: u8 = 1;
    pub const INTERNAL: u8 = 2;
}
