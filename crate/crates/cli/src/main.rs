//! `pogp`: count, expand and cross-check partially ordered generalized
//! patterns in k-ary words.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 verification
//! mismatch, 3 enumeration budget exceeded.

mod commands;
mod report;

use std::io;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::report::Format;

#[derive(Parser, Debug)]
#[command(name = "pogp", version, about = "Exact enumeration of partially ordered generalized patterns in k-ary words")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    /// Enumeration cap in word-steps (overrides POGP_ENUM_CAP).
    #[arg(long, global = true)]
    pub cap: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Incomparable,
    Shuffle,
    Explicit,
}

#[derive(Args, Debug, Clone)]
pub struct PatternArgs {
    /// Pattern in prime notation, e.g. "1'-2-1''".
    #[arg(short = 'p', long = "pattern")]
    pub pattern: String,

    /// How letters of different prime classes compare.
    #[arg(long, value_enum, default_value_t = OrderArg::Incomparable)]
    pub order: OrderArg,

    /// Cross-class pairs for `--order explicit`, e.g. "1'<2,1''<2".
    #[arg(long = "order-spec")]
    pub order_spec: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Gf,
    Oracle,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count words in [k]^n avoiding (or quasi-avoiding) a pattern.
    Count {
        #[command(flatten)]
        pattern: PatternArgs,
        #[arg(short = 'k')]
        k: u32,
        #[arg(short = 'n')]
        n: usize,
        /// Count quasi-avoiders instead (hyphen-free patterns only).
        #[arg(long)]
        quasi: bool,
    },
    /// Avoider counts for n = 0..=N.
    Series {
        #[command(flatten)]
        pattern: PatternArgs,
        #[arg(short = 'k')]
        k: u32,
        #[arg(short = 'N', default_value_t = pogp::gf::DEFAULT_ORDER)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Engine::Oracle)]
        engine: Engine,
    },
    /// List the ordinary generalized patterns a POGP expands to.
    Expand {
        #[command(flatten)]
        pattern: PatternArgs,
    },
    /// Compare avoider counts of two patterns within a budget.
    Equiv {
        #[command(flatten)]
        pattern: PatternArgs,
        /// Second pattern; parsed with the same order mode.
        #[arg(short = 'q')]
        other: String,
        #[arg(short = 'K', default_value_t = 3)]
        max_k: u32,
        #[arg(short = 'N', default_value_t = 6)]
        max_n: usize,
    },
    /// Distribution of the maximum number of non-overlapping occurrences.
    Mnd {
        #[command(flatten)]
        pattern: PatternArgs,
        #[arg(short = 'k', required_unless_present = "word")]
        k: Option<u32>,
        #[arg(short = 'n', required_unless_present = "word")]
        n: Option<usize>,
        /// Use the generating function instead of enumeration.
        #[arg(long)]
        gf: bool,
        /// Degree in y kept by the generating function.
        #[arg(short = 'S', default_value_t = pogp::gf::DEFAULT_Y_DEGREE)]
        y_degree: usize,
        /// Evaluate a single word instead of a distribution.
        #[arg(short = 'w', long, conflicts_with_all = ["k", "n", "gf"])]
        word: Option<String>,
    },
    /// List occurrences of a pattern in a word.
    Match {
        #[command(flatten)]
        pattern: PatternArgs,
        #[arg(short = 'w', long)]
        word: String,
        /// Alphabet size; defaults to the largest letter.
        #[arg(short = 'k')]
        k: Option<u32>,
    },
    /// Run every formula against the oracle and print a pass/fail matrix.
    Verify {
        #[arg(short = 'K', default_value_t = 3)]
        max_k: u32,
        #[arg(short = 'N', default_value_t = 8)]
        max_n: usize,
        /// Restrict to one check group (eq1, registry, quasi, multi,
        /// shuffle, mnd, expansion, equiv).
        #[arg(long)]
        only: Option<String>,
        /// Replace a registry entry by a wrong series (negative control).
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match commands::run(&cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn argument_table_is_consistent() {
        Cli::command().debug_assert();
    }
}
