//! Command-line front end for `flagheight`: job parsing, execution with
//! cross-checks, rendering and the coset cache.

pub mod args;
pub mod cache;
pub mod job;
pub mod render;

use std::time::Instant;

use flagheight::charpoly::{formal_character, weyl_dim};
use flagheight::error::Error;
use flagheight::height::{
    conjecture_bound, denominator_check, height_all, height_fixed_point_with,
    height_harmo_bott_with, height_substitution, theorem_bound, HeightResult,
};
use flagheight::jantzen::{jantzen_rhs, lambda0_component};
use flagheight::parabolic::ParabolicData;
use flagheight::rootsys::{Coweight, RootSystem, Weight};
use flagheight::weyl::{coset_representatives, to_dominant_dotted, CosetList};
use num_rational::BigRational;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cache::{cache_cosets, CacheStatus};
use crate::job::{Command, JobSpec, MethodChoice};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Math(#[from] Error),
}

impl CliError {
    /// 2 parse, 3 invalid mathematical input, 4 size cap, 5 cross-check.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Math(e) => match e {
                Error::InvalidCartan(_)
                | Error::DimensionMismatch { .. }
                | Error::IndexOutOfRange { .. } => 2,
                Error::NotARoot(_)
                | Error::NotInPsi(_)
                | Error::NotAmple { .. }
                | Error::NotDominant(_)
                | Error::Singular(_)
                | Error::NonRegularPoint(_) => 3,
                Error::GroupTooLarge { .. } | Error::QuotientTooLarge { .. } => 4,
                Error::CrossCheck(_) => 5,
            },
        }
    }
}

/// A rendered-ready result document plus diagnostics for stderr.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub document: Value,
    pub warnings: Vec<String>,
}

pub fn run(job: &JobSpec) -> Result<Outcome, CliError> {
    let rs = RootSystem::new(&job.group)?;
    let mut warnings = Vec::new();
    let document = match job.command {
        Command::Height => {
            let lambda = Weight(job.lambda_checked()?);
            height_document(job, &rs, &job.theta_indices(), &lambda, &mut warnings)?
        }
        Command::Scan => scan_document(job, &rs, &mut warnings)?,
        Command::JantzenRhs => jantzen_document(job, &rs)?,
        Command::Char => char_document(job, &rs)?,
        Command::Dim => dim_document(job, &rs)?,
        Command::Bwb => bwb_document(job, &rs)?,
    };
    Ok(Outcome { document, warnings })
}

fn rational(q: &BigRational) -> Value {
    json!({"num": q.numer().to_string(), "den": q.denom().to_string()})
}

fn weight(mu: &Weight) -> Value {
    json!(mu.coords())
}

fn one_based(theta: &[usize]) -> Vec<usize> {
    theta.iter().map(|i| i + 1).collect()
}

fn cosets_for(
    job: &JobSpec,
    rs: &RootSystem,
    theta: &[usize],
    warnings: &mut Vec<String>,
) -> Result<CosetList, CliError> {
    match &job.cache_dir {
        None => Ok(coset_representatives(rs, theta, job.cap)?),
        Some(dir) => {
            let (list, status) = cache_cosets(dir, rs, theta, job.cap)?;
            match status {
                CacheStatus::Rebuilt(reason) => {
                    warnings.push(format!("coset cache rebuilt: {reason}"))
                }
                CacheStatus::Unwritable(reason) => {
                    warnings.push(format!("coset cache not written: {reason}"))
                }
                CacheStatus::Hit | CacheStatus::Created => {}
            }
            Ok(list)
        }
    }
}

fn localization(job: &JobSpec, rs: &RootSystem) -> Result<Option<Coweight>, CliError> {
    job.y
        .as_ref()
        .map(|y| Coweight::new(rs, y.clone()).map_err(CliError::from))
        .transpose()
}

fn compute_height(
    job: &JobSpec,
    pd: &ParabolicData<'_>,
    lambda: &Weight,
    method: MethodChoice,
    warnings: &mut Vec<String>,
) -> Result<HeightResult, CliError> {
    pd.require_ample(lambda)?;
    let rs = pd.root_system();
    let y = localization(job, rs)?;
    if method == MethodChoice::Substitution {
        return Ok(height_substitution(pd, lambda)?);
    }
    let cosets = cosets_for(job, rs, pd.theta(), warnings)?;
    let result = match method {
        MethodChoice::All => height_all(pd, lambda, y.as_ref(), &cosets)?,
        MethodChoice::FixedPoint => height_fixed_point_with(pd, lambda, y.as_ref(), &cosets)?,
        MethodChoice::HarmoBott => height_harmo_bott_with(pd, lambda, y.as_ref(), &cosets)?,
        MethodChoice::Substitution => unreachable!("handled above"),
    };
    Ok(result)
}

fn height_record(
    job: &JobSpec,
    rs: &RootSystem,
    theta: &[usize],
    lambda: &Weight,
    method: MethodChoice,
    warnings: &mut Vec<String>,
) -> Result<Value, CliError> {
    let start = Instant::now();
    let pd = ParabolicData::new(rs, theta)?;
    let result = compute_height(job, &pd, lambda, method, warnings)?;
    let simple = rs.is_simple();
    let cor82 = simple.then(|| denominator_check(&result, theorem_bound(&result)));
    let conjecture = simple.then(|| denominator_check(&result, conjecture_bound(&result)));
    if job.check_conjecture && conjecture == Some(false) {
        warnings.push(format!(
            "conjectured bound c - 1 = {} fails for {} theta {:?} lambda {}",
            conjecture_bound(&result),
            rs.spec(),
            one_based(theta),
            lambda
        ));
    }
    let factorization: serde_json::Map<String, Value> = result
        .denominator_factorization
        .iter()
        .map(|(p, e)| (p.to_string(), json!(e)))
        .collect();
    Ok(json!({
        "group": rs.spec().to_string(),
        "theta": one_based(theta),
        "lambda": weight(lambda),
        "dim": pd.dim(),
        "height": rational(&result.value),
        "methods_agreed": (method == MethodChoice::All).then_some(true),
        "coxeter": result.coxeter,
        "cor82_ok": cor82,
        "conjecture_ok": conjecture,
        "denominator_factorization": factorization,
        "elapsed_ms": start.elapsed().as_millis() as u64,
    }))
}

fn height_document(
    job: &JobSpec,
    rs: &RootSystem,
    theta: &[usize],
    lambda: &Weight,
    warnings: &mut Vec<String>,
) -> Result<Value, CliError> {
    height_record(job, rs, theta, lambda, job.method, warnings)
}

/// The full flag with `lambda = rho`, then every maximal parabolic with the
/// corresponding fundamental weight.
fn scan_document(job: &JobSpec, rs: &RootSystem, warnings: &mut Vec<String>) -> Result<Value, CliError> {
    let n = rs.rank();
    let mut rows = vec![height_record(job, rs, &[], rs.rho(), MethodChoice::All, warnings)?];
    for i in 0..n {
        let theta: Vec<usize> = (0..n).filter(|&j| j != i).collect();
        let lambda = rs.fundamental_weight(i);
        rows.push(height_record(job, rs, &theta, &lambda, MethodChoice::All, warnings)?);
    }
    Ok(json!({"group": rs.spec().to_string(), "rows": rows}))
}

fn jantzen_document(job: &JobSpec, rs: &RootSystem) -> Result<Value, CliError> {
    let lambda = Weight(job.lambda_checked()?);
    let theta = job.theta_indices();
    let pd = ParabolicData::new(rs, &theta)?;
    let combo = jantzen_rhs(&pd, &lambda)?;
    let lambda0_zero = match lambda0_component(&combo, &pd, &lambda) {
        Ok(component) => Some(component.is_empty()),
        Err(Error::Singular(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let rows: Vec<Value> = combo
        .terms()
        .flat_map(|(p, ch)| {
            ch.weights()
                .map(move |(mu, c)| json!({"prime": p, "weight": weight(mu), "coeff": c}))
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(json!({
        "group": rs.spec().to_string(),
        "theta": job.theta,
        "lambda": weight(&lambda),
        "lambda0_component_zero": lambda0_zero,
        "rows": rows,
    }))
}

fn char_document(job: &JobSpec, rs: &RootSystem) -> Result<Value, CliError> {
    let lambda = Weight(job.lambda_checked()?);
    let ch = formal_character(rs, &(&lambda + rs.rho()))?;
    let rows: Vec<Value> = ch
        .weights()
        .map(|(mu, m)| json!({"weight": weight(mu), "mult": m}))
        .collect();
    Ok(json!({
        "group": rs.spec().to_string(),
        "lambda": weight(&lambda),
        "dim": ch.degree(),
        "rows": rows,
    }))
}

fn dim_document(job: &JobSpec, rs: &RootSystem) -> Result<Value, CliError> {
    let lambda = Weight(job.lambda_checked()?);
    let dim = weyl_dim(rs, &lambda)?;
    Ok(json!({
        "group": rs.spec().to_string(),
        "lambda": weight(&lambda),
        "dim": dim.to_string(),
    }))
}

fn bwb_document(job: &JobSpec, rs: &RootSystem) -> Result<Value, CliError> {
    let lambda = Weight(job.lambda_checked()?);
    let group = rs.spec().to_string();
    Ok(match to_dominant_dotted(rs, &lambda) {
        None => json!({
            "group": group,
            "lambda": weight(&lambda),
            "singular": true,
            "word": Value::Null,
            "degree": Value::Null,
            "lambda0": Value::Null,
            "dim": Value::Null,
        }),
        Some((w, lambda0)) => json!({
            "group": group,
            "lambda": weight(&lambda),
            "singular": false,
            "word": one_based(w.word()),
            "degree": w.length(),
            "lambda0": weight(&lambda0),
            "dim": weyl_dim(rs, &lambda0)?.to_string(),
        }),
    })
}

/// Simple-root numbering table for `--print-numbering`.
pub fn numbering_table(rs: &RootSystem) -> String {
    let a = rs.cartan_matrix();
    let mut out = format!("{} (simple roots numbered 1..{})\n", rs.spec(), rs.rank());
    for i in 0..rs.rank() {
        let bonds: Vec<String> = (0..rs.rank())
            .filter(|&j| j != i && a[i][j] != 0)
            .map(|j| match a[i][j] * a[j][i] {
                1 => format!("{}", j + 1),
                2 => format!("{} (double)", j + 1),
                _ => format!("{} (triple)", j + 1),
            })
            .collect();
        let length = if rs.is_long_simple_root(i) { "long" } else { "short" };
        out.push_str(&format!(
            "  {:>2}  {:<5}  linked to: {}\n",
            i + 1,
            length,
            if bonds.is_empty() { "-".to_string() } else { bonds.join(", ") }
        ));
    }
    out
}
