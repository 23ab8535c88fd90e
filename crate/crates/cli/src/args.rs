//! Command-line argument definitions.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::job::{parse_group, parse_list, parse_theta, parse_y, Command, JobSpec, MethodChoice, OutputFormat};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "flagheight", version, about = "Exact heights of flag varieties G/P")]
pub struct Cli {
    /// Print the simple-root numbering used by --theta and --lambda and exit
    #[arg(long)]
    pub print_numbering: bool,

    /// Group for --print-numbering (default: one table per family)
    #[arg(long, requires = "print_numbering")]
    pub group: Option<String>,

    #[command(subcommand)]
    pub command: Option<Cmd>,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Height of G/P with respect to the line bundle of lambda
    Height(JobArgs),
    /// Character side of the Jantzen sum formula, by prime
    JantzenRhs(JobArgs),
    /// Signed character of rho + lambda
    Char(JobArgs),
    /// Dimension of the irreducible module of highest weight lambda
    Dim(JobArgs),
    /// Borel-Weil-Bott normalization of lambda
    Bwb(JobArgs),
    /// Heights of the full flag and every maximal parabolic
    Scan(JobArgs),
}

#[derive(Debug, Args)]
pub struct JobArgs {
    /// Cartan type, e.g. A3, G2 or B2xA1
    #[arg(long)]
    pub group: String,

    /// Simple roots in the Levi factor, 1-based comma list; empty for the Borel
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub theta: String,

    /// Weight in fundamental-weight coordinates, comma list
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub lambda: String,

    #[arg(long, value_enum, default_value_t = MethodChoice::All)]
    pub method: MethodChoice,

    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,

    /// Localization point as values on the simple roots, comma list of rationals
    #[arg(long, allow_hyphen_values = true)]
    pub y: Option<String>,

    /// Largest number of coset representatives to enumerate
    #[arg(long, default_value_t = flagheight::weyl::DEFAULT_COSET_CAP)]
    pub cap: u128,

    /// Directory for cached coset representatives
    #[arg(long, env = "FLAGHEIGHT_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Warn on stderr when the conjectured denominator bound fails
    #[arg(long)]
    pub check_conjecture: bool,
}

impl Cmd {
    pub fn into_job(self) -> Result<JobSpec, CliError> {
        let (command, args) = match self {
            Cmd::Height(a) => (Command::Height, a),
            Cmd::JantzenRhs(a) => (Command::JantzenRhs, a),
            Cmd::Char(a) => (Command::Char, a),
            Cmd::Dim(a) => (Command::Dim, a),
            Cmd::Bwb(a) => (Command::Bwb, a),
            Cmd::Scan(a) => (Command::Scan, a),
        };
        let group = parse_group(&args.group)?;
        Ok(JobSpec {
            command,
            theta: parse_theta(&args.theta, group.rank())?,
            lambda: parse_list(&args.lambda, "lambda")?,
            group,
            method: args.method,
            output: args.output,
            y: args.y.as_deref().map(parse_y).transpose()?,
            cap: args.cap,
            cache_dir: args.cache_dir,
            check_conjecture: args.check_conjecture,
        })
    }
}
