//! The `gtype` command line.
//!
//! Every report is line oriented, `key=value` or `<tag> key=value ...`, so
//! that output can be compared byte for byte. Diagnostics go to standard error.
//!
//! Exit codes: 0 success (in class for `check`), 1 negative verdict, 2 parse or
//! IO error, 3 invalid type or unmet precondition, 4 budget exceeded or
//! inconclusive, 5 internal inconsistency.

mod commands;
mod error;
mod render;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use error::CliError;
pub use render::render_svg;

#[derive(Debug, Parser)]
#[command(name = "gtype", version, about = "Geometric types of geometric Markov partitions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Relation {
    S,
    U,
    #[value(name = "T")]
    T,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every invariant of a type file.
    Validate { file: PathBuf },
    /// Sizes, incidence matrix, mixing, double boundaries and the Perron root.
    Info { file: PathBuf },
    /// The power `T^m`, serialized.
    Power {
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        file: PathBuf,
    },
    /// The inverse type, serialized.
    Invert { file: PathBuf },
    /// Membership in the pseudo-Anosov class, or checks a witness certificate.
    Check {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_power: Option<u64>,
        /// File of `WITNESS` lines to re-validate instead of scanning.
        #[arg(long, value_name = "CERT")]
        verify: Option<PathBuf>,
        file: PathBuf,
    },
    /// Boundary label orbits, boundary codes and the corner property.
    Boundary { file: PathBuf },
    /// Whether two codes are related, with a chain of identifications.
    Related {
        #[arg(long, value_enum)]
        rel: Relation,
        file: PathBuf,
        code1: String,
        code2: String,
    },
    /// Prong orbits, Euler characteristic and genus.
    Surface {
        /// Skip the class precondition; inconsistencies still exit 5.
        #[arg(long)]
        force: bool,
        file: PathBuf,
    },
    /// Combinatorial conditions against the affine model, powers 1 to m.
    Oracle {
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        file: PathBuf,
    },
    /// Draw the type as SVG; with `-m`, the ribbon ends of generations 1 to m.
    Render {
        #[arg(short)]
        m: Option<u64>,
        #[arg(short, value_name = "OUT.svg")]
        o: PathBuf,
        file: PathBuf,
    },
}

/// Where the subcommand writes.
pub(crate) struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let mut io = Io { stdin, out, err };
    match commands::dispatch(&cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            e.exit_code()
        }
    }
}
