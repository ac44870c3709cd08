//! Command-line front end for `brauerpar-core`: job configs, reports and
//! exit codes.

pub mod commands;
pub mod config;
pub mod job;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use brauerpar_core::ErrorKind;
use clap::{Args, Parser, Subcommand};

pub use commands::{execute, Command};
pub use config::{ConfigError, JobConfig};
pub use report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_MATH: i32 = 4;
pub const EXIT_MODEL_GAP: i32 = 5;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("config: {0}")]
    Config(#[from] ConfigError),
    #[error("config: {0}")]
    Resolve(String),
    #[error("{0}")]
    MissingInput(&'static str),
    #[error("relation does not hold: permutation characters differ on class {class} (value {value})")]
    RelationFails { class: usize, value: String },
    #[error("no relation is supported on {0}")]
    NoRelation(String),
    #[error("{context}: {source}")]
    Core { context: String, source: brauerpar_core::Error },
}

impl CliError {
    pub fn core(context: String, source: brauerpar_core::Error) -> Self {
        CliError::Core { context, source }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_)
            | CliError::Io { .. }
            | CliError::Config(_)
            | CliError::Resolve(_)
            | CliError::MissingInput(_) => EXIT_CONFIG,
            CliError::RelationFails { .. } | CliError::NoRelation(_) => EXIT_MATH,
            CliError::Core { source, .. } => match source.kind() {
                ErrorKind::Input => EXIT_CONFIG,
                ErrorKind::Cap => EXIT_CAP,
                ErrorKind::Math => EXIT_MATH,
                ErrorKind::ModelGap => EXIT_MODEL_GAP,
            },
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "brauerpar", version, about = "Brauer relations, regulator constants and Selmer parity from local data")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Basis of relations between permutation representations
    Relations(Common),
    /// Regulator constants of the relation for each representation
    Regconst(Common),
    /// Representations whose regulator constant has odd p-adic valuation
    Stheta(Common),
    /// Splitting of each local prime in the fixed fields of the relation
    Splitting(Common),
    /// Full parity prediction
    Parity(Common),
}

#[derive(Args, Debug)]
struct Common {
    /// Job configuration file
    #[arg(long)]
    config: Option<PathBuf>,
    /// Named group, e.g. dihedral:6, gl2:3, borel_quotient:5, cyclic:12
    #[arg(long)]
    group: Option<String>,
    /// The prime p (overrides the config)
    #[arg(long)]
    p: Option<u64>,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn load(common: &Common) -> Result<JobConfig, CliError> {
    let mut cfg = match &common.config {
        Some(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })?;
            JobConfig::parse(&text)?
        }
        None => JobConfig::default(),
    };
    if let Some(g) = &common.group {
        if cfg.group.is_some() {
            return Err(CliError::Usage(String::from("--group conflicts with the [group] section of the config")));
        }
        let spec = g.parse().map_err(|e| CliError::core(String::from("--group"), e))?;
        cfg.group = Some(config::GroupSource::Named(spec));
    }
    if common.p.is_some() {
        cfg.p = common.p;
    }
    if cfg.group.is_none() {
        return Err(CliError::Usage(String::from("no group: pass --group or --config")));
    }
    Ok(cfg)
}

/// Runs one invocation; `args` excludes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("brauerpar")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.to_string();
            return if e.use_stderr() {
                let first = text.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: ");
                Outcome { code: EXIT_CONFIG, stdout: String::new(), stderr: format!("brauerpar: {first}") }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let (command, common) = match cli.command {
        Sub::Relations(c) => (Command::Relations, c),
        Sub::Regconst(c) => (Command::Regconst, c),
        Sub::Stheta(c) => (Command::Stheta, c),
        Sub::Splitting(c) => (Command::Splitting, c),
        Sub::Parity(c) => (Command::Parity, c),
    };
    match load(&common).and_then(|cfg| execute(command, &cfg)) {
        Ok(report) => Outcome { code: EXIT_OK, stdout: report.to_string(), stderr: String::new() },
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("brauerpar: {e}") },
    }
}
