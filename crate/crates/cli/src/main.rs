//! `ffield`: construct finite fields, count irreducibles and verify the
//! counting identities from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 budget or resource error.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::{emit, emit_error, Format};

#[derive(Debug, Parser)]
#[command(
    name = "ffield",
    version,
    about = "Exact finite fields and irreducible polynomial census"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json, env = "FFIELD_FORMAT")]
    pub format: Format,
    /// Seed for every randomized path.
    #[arg(long, global = true, default_value_t = 0, env = "FFIELD_SEED")]
    pub seed: u64,
    /// Largest polynomial degree materialized (F(n) has degree n q^n).
    #[arg(long, global = true, default_value_t = ffield::identity::DEFAULT_DEGREE_BUDGET, env = "FFIELD_BUDGET_DEGREE",
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_degree: u64,
    /// Largest field constructed, in elements.
    #[arg(long, global = true, default_value_t = 1 << 24, env = "FFIELD_BUDGET_FIELD_SIZE",
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_field_size: u64,
    /// Omit the generation timestamp so reports are byte-identical across runs.
    #[arg(long, global = true, env = "FFIELD_NO_TIMESTAMP")]
    pub no_timestamp: bool,
    /// Worker threads (0 = one per core). Output does not depend on this.
    #[arg(long, global = true, default_value_t = 0, env = "FFIELD_THREADS")]
    pub threads: usize,
}

/// A field given either as `--q` (a prime), or as `--p` with an optional
/// tower of moduli in compact index form, innermost first.
#[derive(Debug, Args, Clone, Default)]
pub struct FieldArgs {
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub p: Option<u64>,
    /// Comma-separated moduli, e.g. `2:11` for x^2 + x + 1 over F_2.
    #[arg(long, value_delimiter = ',')]
    pub tower: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Finite-field construction.
    #[command(subcommand)]
    Field(FieldCommand),
    /// Monic irreducible counts and lists.
    #[command(subcommand)]
    Irreducible(IrreducibleCommand),
    /// Exact verification of the counting identities.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Central binomial valuations and the postulate scan.
    #[command(subcommand)]
    Bertrand(BertrandCommand),
    /// Zeta series and Euler product.
    #[command(subcommand)]
    Zeta(ZetaCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    Lex,
    Random,
}

#[derive(Debug, Subcommand)]
pub enum FieldCommand {
    /// Build GF(p^n) (or an extension of a tower) from a found irreducible.
    Construct {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_delimiter = ',')]
        tower: Vec<String>,
        #[arg(long, value_enum, default_value_t = Strategy::Lex)]
        strategy: Strategy,
        /// Fields up to this size are checked exhaustively, larger ones sampled.
        #[arg(long, default_value_t = 512)]
        exhaustive_limit: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
    },
}

#[derive(Debug, Args)]
pub struct DegreeRange {
    /// A single degree.
    #[arg(long, conflicts_with = "degree_max")]
    pub degree: Option<u64>,
    /// All degrees 1..=D.
    #[arg(long)]
    pub degree_max: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum IrreducibleCommand {
    /// π(d) by the Möbius formula, cross-checked by enumeration where feasible.
    Count {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        range: DegreeRange,
    },
    /// The monic irreducibles themselves.
    List {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        range: DegreeRange,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// F(n)/F(n-1)^q = product of irreducibles of degree dividing n = x^(q^n) - x.
    Identity {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 4)]
        n_max: u64,
    },
    /// q^n = Σ_{d|n} d π(d).
    Gauss {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 12)]
        n_max: u64,
    },
    /// Zeta series against its Euler product.
    Zeta {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 12)]
        terms: usize,
    },
    /// Central binomial valuations, size bounds and the postulate scan.
    Bertrand {
        #[arg(long, default_value_t = 100_000)]
        max: u64,
    },
    /// Every suite at its default grid.
    All,
}

#[derive(Debug, Subcommand)]
pub enum BertrandCommand {
    /// Smallest prime in (N, 2N] for every N in [2, max].
    Scan {
        #[arg(long)]
        max: u64,
        /// Include every certificate in the JSON output.
        #[arg(long)]
        certificates: bool,
    },
    /// Prime factorization of C(2N, N) from Legendre's formula.
    Profile {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum ZetaCommand {
    /// Coefficients of the zeta series, Euler product and log-derivative.
    Check {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 12)]
        terms: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.global.threads > 0 {
        // Only fails if a global pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.global.threads)
            .build_global();
    }
    match commands::run(&cli) {
        Ok(outcome) => {
            emit(&cli.global, &outcome);
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            let code = err.exit_code();
            emit_error(&cli.global, &err);
            ExitCode::from(code)
        }
    }
}
