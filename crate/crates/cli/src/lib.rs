//! Command-line front end for `dynr`.
//!
//! Exit codes: 0 when every check passes, 1 for usage, parse and input
//! errors, 2 when a verification fails.

pub mod catalog;
mod commands;
pub mod gen;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Environment variable naming the directory for `--out` files.
pub const OUT_DIR_ENV: &str = "DYNR_OUT_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "dynr", version, about = "Exact r-matrices, Lagrangian subalgebras and twists for sl(n)")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimensions and roots of an algebra
    Info(AlgebraArg),
    /// Reductive subsets containing a given root set
    Reductive(ReductiveArgs),
    /// Build or verify x_{N,h}
    #[command(subcommand)]
    Rmatrix(RmatrixCmd),
    /// Lagrangian subalgebras of g[ε]
    #[command(subcommand)]
    Lagrangian(LagrangianCmd),
    /// Twist conditions
    #[command(subcommand)]
    Twist(TwistCmd),
    /// Reproduce a worked example
    #[command(subcommand)]
    Example(ExampleCmd),
    /// Every structure for a fixed (g, U), with all oracles run
    Catalog(CatalogArgs),
    /// Verify any document produced by this tool
    Verify(FileArg),
    /// Randomized property checks
    Selftest(SelftestArgs),
}

#[derive(Args, Debug)]
struct AlgebraArg {
    /// Algebra id, e.g. A2
    #[arg(long)]
    algebra: String,
}

#[derive(Args, Debug)]
struct OutArg {
    /// Write JSON here instead of stdout; relative paths resolve against $DYNR_OUT_DIR
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct FileArg {
    file: PathBuf,
}

#[derive(Args, Debug)]
struct ReductiveArgs {
    #[arg(long)]
    algebra: String,
    /// Roots in simple coordinates; negatives are added
    #[arg(long, default_value = "[]")]
    contains: String,
}

#[derive(Args, Debug)]
struct StructureArgs {
    #[arg(long)]
    algebra: String,
    /// Roots of U in simple coordinates; negatives are added
    #[arg(long = "U", default_value = "[]")]
    u: String,
    /// Roots of N in simple coordinates; negatives are added
    #[arg(long = "N")]
    n: String,
    /// Diagonal entries of h, comma separated, or `auto`
    #[arg(long, default_value = "auto")]
    h: String,
}

#[derive(Subcommand, Debug)]
enum RmatrixCmd {
    /// Emit x_{N,h} with provenance
    Build {
        #[command(flatten)]
        s: StructureArgs,
        #[command(flatten)]
        out: OutArg,
    },
    /// Rerun both membership oracles on a file
    Verify(FileArg),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Sign {
    #[value(name = "+1", alias = "1", alias = "plus")]
    Plus,
    #[value(name = "-1", alias = "minus")]
    Minus,
}

#[derive(Subcommand, Debug)]
enum LagrangianCmd {
    /// l(n, B) from a pair file
    BuildFromPair {
        file: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// u ⊕ εg_{R∖N} ⊕ (1 ± α(h)ε)g_{N∖U}
    BuildLnb {
        #[command(flatten)]
        s: StructureArgs,
        #[arg(long, value_enum, default_value = "-1", allow_hyphen_values = true)]
        sign: Sign,
        #[command(flatten)]
        out: OutArg,
    },
    /// Drinfeld's subspace of a bivector file
    FromBivector {
        file: PathBuf,
        /// Required when the file is a bare tensor
        #[arg(long = "U")]
        u: Option<String>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Recover (n, B) from a Lagrangian file
    ToPair {
        file: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Isotropy, dimension and closure of a Lagrangian file
    Verify(FileArg),
}

#[derive(Subcommand, Debug)]
enum TwistCmd {
    /// Evaluate both twist conditions
    Check {
        #[arg(long)]
        rho: PathBuf,
        #[arg(long)]
        s: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClosedFormArg {
    Printed,
    Corrected,
}

#[derive(Subcommand, Debug)]
enum ExampleCmd {
    /// The sl(n) parabolic example: project r(0) and compare with the closed form
    AppendixB {
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// h_1..h_n, comma separated; defaults to a symmetric progression
        #[arg(long, allow_hyphen_values = true)]
        h: Option<String>,
        /// Sign convention for D_i in the closed form
        #[arg(long, value_enum, default_value = "printed")]
        closed_form: ClosedFormArg,
        /// Write r0, p(r0) and v as JSON into this directory (relative to $DYNR_OUT_DIR)
        #[arg(long)]
        dump: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct CatalogArgs {
    #[arg(long)]
    algebra: String,
    #[arg(long = "U", default_value = "[]")]
    u: String,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args, Debug)]
struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random cases per algebra
    #[arg(long, default_value_t = 20)]
    cases: usize,
}

/// Parses `argv` and runs the command, writing reports to `out`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match commands::dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
