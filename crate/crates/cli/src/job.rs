//! Job specifications and their parsing from command-line strings.

use std::path::PathBuf;
use std::str::FromStr;

use clap::ValueEnum;
use flagheight::rootsys::CartanSpec;
use num_rational::BigRational;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Height,
    JantzenRhs,
    Char,
    Dim,
    Bwb,
    Scan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    All,
    Substitution,
    FixedPoint,
    HarmoBott,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

/// A fully parsed job. `theta` is 1-based, as on the command line.
#[derive(Debug, Clone, PartialEq)]
pub struct JobSpec {
    pub command: Command,
    pub group: CartanSpec,
    pub theta: Vec<usize>,
    pub lambda: Vec<i64>,
    pub method: MethodChoice,
    pub output: OutputFormat,
    pub y: Option<Vec<BigRational>>,
    pub cap: u128,
    pub cache_dir: Option<PathBuf>,
    pub check_conjecture: bool,
}

impl JobSpec {
    /// A job with default options for the given group and weight strings.
    pub fn new(command: Command, group: &str, theta: &str, lambda: &str) -> Result<JobSpec, CliError> {
        let group = parse_group(group)?;
        let theta = parse_theta(theta, group.rank())?;
        let lambda = parse_list::<i64>(lambda, "lambda")?;
        Ok(JobSpec {
            command,
            group,
            theta,
            lambda,
            method: MethodChoice::All,
            output: OutputFormat::Json,
            y: None,
            cap: flagheight::weyl::DEFAULT_COSET_CAP,
            cache_dir: None,
            check_conjecture: false,
        })
    }

    /// 0-based theta for the library.
    pub fn theta_indices(&self) -> Vec<usize> {
        self.theta.iter().map(|i| i - 1).collect()
    }

    /// Weight coordinates, checked against the rank.
    pub fn lambda_checked(&self) -> Result<Vec<i64>, CliError> {
        if self.lambda.len() != self.group.rank() {
            return Err(CliError::Parse(format!(
                "--lambda has {} entries, the rank of {} is {}",
                self.lambda.len(),
                self.group,
                self.group.rank()
            )));
        }
        Ok(self.lambda.clone())
    }
}

pub fn parse_group(s: &str) -> Result<CartanSpec, CliError> {
    s.parse()
        .map_err(|e: flagheight::error::Error| CliError::Parse(e.to_string()))
}

/// Comma-separated values; the empty string is the empty list.
pub fn parse_list<T: FromStr>(s: &str, what: &str) -> Result<Vec<T>, CliError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            part.trim()
                .parse()
                .map_err(|_| CliError::Parse(format!("--{what}: cannot parse {:?}", part.trim())))
        })
        .collect()
}

pub fn parse_theta(s: &str, rank: usize) -> Result<Vec<usize>, CliError> {
    let mut theta = parse_list::<usize>(s, "theta")?;
    if let Some(&bad) = theta.iter().find(|&&i| i == 0 || i > rank) {
        return Err(CliError::Parse(format!(
            "--theta: index {bad} outside 1..={rank}"
        )));
    }
    theta.sort_unstable();
    theta.dedup();
    Ok(theta)
}

pub fn parse_y(s: &str) -> Result<Vec<BigRational>, CliError> {
    parse_list::<BigRational>(s, "y")
}
