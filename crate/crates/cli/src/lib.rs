//! Command-line front end for `pyrene-core`.
//!
//! Every command renders its whole output into memory first, so identical
//! arguments always produce byte-identical output.

pub mod args;
mod commands;
mod emit;
mod validate;

use std::fmt;
use std::fs;

use pyrene_core::{Error, Instance, NamedGraph, SystemSpec};

use args::{Cli, Command, FamilyArg, SystemArgs};
pub use validate::{CheckRecord, CheckStatus, ValidateConfig, ValidationReport};

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    ValidationFailure = 1,
    InputError = 2,
    Mismatch = 3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub status: ExitStatus,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            status: ExitStatus::InputError,
            message: message.into(),
        }
    }

    pub fn mismatch(message: impl Into<String>) -> Self {
        CliError {
            status: ExitStatus::Mismatch,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::InvalidParameter(_) | Error::Parse { .. } | Error::EmptyPolynomial => {
                ExitStatus::InputError
            }
            Error::UnsupportedGraph(_) | Error::CapExceeded(_) => ExitStatus::Mismatch,
            Error::InternalConsistency(_) => ExitStatus::ValidationFailure,
        };
        CliError {
            status,
            message: e.to_string(),
        }
    }
}

/// What a command produced: the rendered bytes and the status to exit with.
#[derive(Debug)]
pub struct Outcome {
    pub body: Vec<u8>,
    pub status: ExitStatus,
}

/// Runs one parsed command. Output goes to `--out` when given, otherwise it is
/// returned in the outcome for the caller to print.
pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    let (rendered, out) = match cli.command {
        Command::Generate { system, output } => (
            commands::generate(&resolve(&system)?, output.format)?,
            output.out,
        ),
        Command::Matchings { system, output } => (
            commands::matchings(&resolve(&system)?, output.format)?,
            output.out,
        ),
        Command::Polynomial(args) => (commands::polynomial(&args)?, args.output.out),
        Command::Spectrum(args) => (commands::spectrum(&args)?, args.output.out),
        Command::Sequence {
            name,
            route,
            max_n,
            output,
        } => (
            commands::sequence(name, route.as_deref(), max_n, output.format)?,
            output.out,
        ),
        Command::Validate {
            config,
            max_n,
            forcing_seed,
            caps,
            output,
        } => {
            let mut cfg = match config {
                Some(text) => ValidateConfig::parse(&read_document(&text)?)?,
                None => ValidateConfig::default(),
            };
            if let Some(n) = max_n {
                cfg.max_n = n;
            }
            if let Some(seed) = forcing_seed {
                cfg.forcing_seed = Some(seed.split(',').map(|s| s.trim().to_owned()).collect());
            }
            if let Some(c) = caps {
                cfg.caps = Some(c);
            }
            let report = validate::run(&cfg)?;
            let status = if report.failures.is_empty() {
                ExitStatus::Success
            } else {
                ExitStatus::ValidationFailure
            };
            let body = emit::validation(&report, output.format)?;
            return finish(body, output.out, status);
        }
    };
    finish(rendered, out, ExitStatus::Success)
}

fn finish(
    body: Vec<u8>,
    out: Option<std::path::PathBuf>,
    status: ExitStatus,
) -> Result<Outcome, CliError> {
    match out {
        Some(path) => {
            fs::write(&path, &body)
                .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))?;
            Ok(Outcome {
                body: Vec::new(),
                status,
            })
        }
        None => Ok(Outcome { body, status }),
    }
}

/// Inline JSON when the argument starts with `{`, a file path otherwise.
pub fn read_document(arg: &str) -> Result<Vec<u8>, CliError> {
    if arg.trim_start().starts_with('{') {
        Ok(arg.as_bytes().to_vec())
    } else {
        fs::read(arg).map_err(|e| CliError::input(format!("cannot read {arg}: {e}")))
    }
}

pub fn resolve(args: &SystemArgs) -> Result<Instance, CliError> {
    let spec = match (&args.system, args.family) {
        (Some(doc), _) => {
            if args.n.is_some() {
                return Err(CliError::input("--n only applies together with --family"));
            }
            SystemSpec::parse(&read_document(doc)?)?
        }
        (None, Some(family)) => {
            let needs_n = matches!(family, FamilyArg::PyreneChain | FamilyArg::Auxiliary);
            match (needs_n, args.n) {
                (true, None) => return Err(CliError::input("--n is required for this family")),
                (true, Some(0)) => return Err(CliError::input("--n must be at least 1")),
                (false, Some(_)) => {
                    return Err(CliError::input("--n does not apply to a named graph"))
                }
                _ => {}
            }
            match family {
                FamilyArg::PyreneChain => SystemSpec::PyreneChain {
                    n: args.n.unwrap_or_default(),
                },
                FamilyArg::Auxiliary => SystemSpec::Auxiliary {
                    n: args.n.unwrap_or_default(),
                },
                FamilyArg::Pyrene => SystemSpec::Named(NamedGraph::Pyrene),
                FamilyArg::Phenanthrene => SystemSpec::Named(NamedGraph::Phenanthrene),
                FamilyArg::Diphenyl => SystemSpec::Named(NamedGraph::Diphenyl),
            }
        }
        (None, None) => return Err(CliError::input("give a system with --system or --family")),
    };
    Ok(spec.instance()?)
}
