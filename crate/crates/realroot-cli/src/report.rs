//! The report envelope every subcommand emits, plus the stable exit-code
//! contract.

use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

/// Exit codes are a stable contract:
/// 0 success/verified, 2 input error, 3 inconclusive enclosure,
/// 4 certification failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Verified,
    InputError,
    Inconclusive,
    Uncertified,
}

impl Outcome {
    pub fn code(self) -> i32 {
        match self {
            Outcome::Verified => 0,
            Outcome::InputError => 2,
            Outcome::Inconclusive => 3,
            Outcome::Uncertified => 4,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub certificates: Value,
    pub version: String,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: Value, certificates: Value) -> Self {
        Self {
            command: command.to_string(),
            inputs,
            results,
            certificates,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    /// Pretty JSON to `--out` or stdout. Serialization is deterministic:
    /// struct fields keep declaration order and maps are sorted.
    pub fn write(&self, out: Option<&Path>) -> std::io::Result<()> {
        let text = serde_json::to_string_pretty(self).expect("report serializes");
        match out {
            Some(path) => std::fs::write(path, text + "\n"),
            None => {
                let stdout = std::io::stdout();
                let mut lock = stdout.lock();
                writeln!(lock, "{text}")
            }
        }
    }
}
