use std::time::{SystemTime, UNIX_EPOCH};

use clap::ValueEnum;
use serde_json::{json, Value};

use crate::GlobalOpts;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

/// Result of one command, renderable in every output format.
pub struct Outcome {
    pub command: String,
    pub params: Value,
    pub passed: bool,
    pub result: Value,
    /// Header line first.
    pub tsv: Vec<String>,
    pub text: String,
}

#[derive(Debug)]
pub enum ErrorKind {
    Usage,
    Budget,
    Verification,
}

#[derive(Debug)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            kind: ErrorKind::Usage,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.kind {
            ErrorKind::Verification => 1,
            ErrorKind::Usage => 2,
            ErrorKind::Budget => 3,
        }
    }

    fn kind_name(&self) -> &'static str {
        match self.kind {
            ErrorKind::Usage => "usage",
            ErrorKind::Budget => "budget",
            ErrorKind::Verification => "verification",
        }
    }
}

impl From<ffield::Error> for CliError {
    fn from(err: ffield::Error) -> Self {
        use ffield::Error as E;
        let kind = match err {
            E::BudgetExceeded { .. } | E::Overflow(_) => ErrorKind::Budget,
            E::InvariantViolation(_) => ErrorKind::Verification,
            _ => ErrorKind::Usage,
        };
        Self {
            kind,
            message: err.to_string(),
        }
    }
}

fn timestamp(opts: &GlobalOpts) -> Option<u64> {
    if opts.no_timestamp {
        return None;
    }
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .ok()
        .map(|d| d.as_secs())
}

pub fn emit(opts: &GlobalOpts, outcome: &Outcome) {
    match opts.format {
        Format::Json => {
            let mut doc = json!({
                "command": outcome.command,
                "params": outcome.params,
                "passed": outcome.passed,
                "result": outcome.result,
            });
            if let Some(ts) = timestamp(opts) {
                doc["generated_at_unix"] = json!(ts);
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable report")
            );
        }
        Format::Tsv => {
            for line in &outcome.tsv {
                println!("{line}");
            }
        }
        Format::Text => {
            print!("{}", outcome.text);
            if !outcome.text.ends_with('\n') {
                println!();
            }
            println!("{}", if outcome.passed { "PASS" } else { "FAIL" });
        }
    }
}

pub fn emit_error(opts: &GlobalOpts, err: &CliError) {
    match opts.format {
        Format::Json => {
            let doc = json!({
                "error": { "kind": err.kind_name(), "message": err.message },
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable error")
            );
        }
        Format::Tsv | Format::Text => {}
    }
    eprintln!("error ({}): {}", err.kind_name(), err.message);
}
