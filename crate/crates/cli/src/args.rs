use std::path::PathBuf;
use std::str::FromStr;

use bipart_core::{Fault, Symbol};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(name = "bipart", version, about = "Exact partition and bipartition counts, Lusztig symbols, identity checks")]
pub struct Cli {
    /// Output format (default: text, except `symbols counts` which defaults to json)
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output to FILE instead of standard output
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// p(n) by Euler's pentagonal recursion
    P {
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// p2(n) by the k^2 recursion
    P2 {
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// Rows n, p(n), p2(n), p(n/2), |Phi_n^+|, |Phi_n^-| for n = 0..=max
    Table {
        #[arg(long)]
        max: u64,
    },
    /// Lusztig symbol tables
    Symbols {
        #[command(subcommand)]
        command: SymbolsCommand,
    },
    /// Run identity checks; exit 0 on pass, 1 on any failure
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum SymbolsCommand {
    /// Similarity classes of the given rank and defect
    Enumerate {
        #[arg(long)]
        rank: u64,
        #[arg(long, allow_negative_numbers = true)]
        defect: i64,
    },
    /// The family of a special symbol, e.g. `3,1;2,0`
    Family {
        #[arg(long)]
        symbol: Symbol,
    },
    /// Number of classes of each even defect at the given rank
    Counts {
        #[arg(long)]
        rank: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    All,
    Euler,
    Thm1,
    Lemma22,
    Jacobi,
    Firstproof,
    Families,
    Corollary,
    Appendix,
    Congruence,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub target: Target,

    /// Series / count bound; overrides each target's default
    #[arg(long)]
    pub max: Option<u64>,

    /// Bound for checks that enumerate partitions, bipartitions or symbols
    #[arg(long)]
    pub enum_max: Option<u64>,

    /// Perturb the left side of check CHECK at INDEX by DELTA (default 1)
    #[arg(long, hide = true, value_name = "CHECK:INDEX[:DELTA]")]
    pub inject_fault: Option<FaultArg>,
}

#[derive(Debug, Clone)]
pub struct FaultArg(pub Fault);

impl FromStr for FaultArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut parts = s.split(':');
        let (Some(check), Some(index)) = (parts.next(), parts.next()) else {
            return Err(format!("expected CHECK:INDEX[:DELTA], got `{s}`"));
        };
        let index = index.parse::<usize>().map_err(|e| format!("bad index: {e}"))?;
        let delta = match parts.next() {
            Some(d) => d.parse::<i64>().map_err(|e| format!("bad delta: {e}"))?,
            None => 1,
        };
        if parts.next().is_some() {
            return Err(format!("expected CHECK:INDEX[:DELTA], got `{s}`"));
        }
        Ok(FaultArg(Fault::new(check, index, delta)))
    }
}
