//! `bipart`: exact partition/bipartition counts, Lusztig symbol tables and
//! the identity verification harness.
//!
//! Exit status: 0 success (all verifications passed), 1 verification
//! failure, 2 usage or request error.

mod args;
mod output;
mod tables;
mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, SymbolsCommand};
use output::Format;

/// Outcome of a command that ran to completion.
pub(crate) enum Status {
    Ok,
    VerificationFailed,
}

fn run(cli: &Cli, out: &mut dyn Write) -> Result<Status, String> {
    let format = |default| cli.format.unwrap_or(default);
    let written = match &cli.command {
        Command::P { n } => tables::count(out, format(Format::Text), "p", *n, bipart_core::partition::p_euler(*n)),
        Command::P2 { n } => tables::count(out, format(Format::Text), "p2", *n, bipart_core::partition::p2_theorem(*n)),
        Command::Table { max } => tables::emit_table(out, format(Format::Text), *max),
        Command::Symbols { command } => match command {
            SymbolsCommand::Enumerate { rank, defect } => {
                tables::enumerate_symbols(out, format(Format::Text), *rank, *defect)
            }
            SymbolsCommand::Family { symbol } => tables::family(out, format(Format::Text), symbol),
            SymbolsCommand::Counts { rank } => tables::counts(out, format(Format::Json), *rank),
        },
        Command::Verify(v) => return verify::run(out, format(Format::Text), v),
    };
    written.map(|()| Status::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut sink: Box<dyn Write> = match &cli.out {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => {
                eprintln!("error: cannot create {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let result = run(&cli, &mut sink);
    if let Err(e) = sink.flush() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match result {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::VerificationFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
