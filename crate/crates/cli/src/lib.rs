//! Command-line front end for the `zetatree` crate.

pub mod commands;
pub mod record;
pub mod verify;

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use commands::{BernoulliMethod, CliError};
use record::{inputs, OutputFormat, OutputRecord};
use verify::Suite;

#[derive(Debug, Parser)]
#[command(name = "zetatree", version, about = "Exact Bernoulli numbers and zeta(2k) via plane trees")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Also show decimal approximations of exact values.
    #[arg(long, global = true)]
    pub approx: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact B_{2k}.
    Bernoulli {
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long, value_enum, default_value_t = BernoulliMethod::Recursion)]
        method: BernoulliMethod,
    },
    /// The integers A_k = P_k(k) for k = 1..=max.
    Ak {
        #[arg(long, visible_alias = "max-k", default_value_t = 8)]
        max: usize,
    },
    /// The polynomial P_k, optionally shifted.
    Pk {
        #[arg(long)]
        k: usize,
        /// Show P_k(x + k - 3/2).
        #[arg(long)]
        translated: bool,
        /// Show P_k(x/2 + k - 3/2); implies --translated.
        #[arg(long)]
        half_scale: bool,
        /// Also print the coefficients c_(i,k) in the f_(R(i);k-1) basis.
        #[arg(long)]
        basis: bool,
    },
    /// zeta(2k) as a rational multiple of pi^(2k).
    ZetaEven {
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        max_k: Option<usize>,
    },
    /// Plane trees with k vertices.
    Trees {
        #[arg(long)]
        k: usize,
        /// List every tree with its Low, High and weight.
        #[arg(long)]
        list: bool,
        /// File of R_1, R_2, ... (one rational per line).
        #[arg(long)]
        sequence: Option<PathBuf>,
    },
    /// The tree transform of a sequence R.
    Transform {
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        max_k: Option<usize>,
        /// File of R_1, R_2, ... (one rational per line); default R_n = 2n + 1.
        #[arg(long)]
        sequence: Option<PathBuf>,
    },
    /// Run invariant checks.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long)]
        max_k: Option<usize>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Bernoulli { .. } => "bernoulli",
            Command::Ak { .. } => "ak",
            Command::Pk { .. } => "pk",
            Command::ZetaEven { .. } => "zeta-even",
            Command::Trees { .. } => "trees",
            Command::Transform { .. } => "transform",
            Command::Verify { .. } => "verify",
        }
    }

    /// The raw arguments, echoed in error records.
    fn inputs(&self) -> BTreeMap<String, Value> {
        let n = |v: &Option<usize>| v.map(|v| json!(v));
        let path = |p: &Option<PathBuf>| p.as_ref().map(|p| json!(p.display().to_string()));
        match self {
            Command::Bernoulli { k, max_k, method } => {
                inputs([("k", n(k)), ("max_k", n(max_k)), ("method", Some(json!(format!("{method:?}").to_lowercase())))])
            }
            Command::Ak { max } => inputs([("max", Some(json!(max)))]),
            Command::Pk { k, translated, half_scale, basis } => inputs([
                ("k", Some(json!(k))),
                ("translated", Some(json!(translated))),
                ("half_scale", Some(json!(half_scale))),
                ("basis", Some(json!(basis))),
            ]),
            Command::ZetaEven { k, max_k } => inputs([("k", n(k)), ("max_k", n(max_k))]),
            Command::Trees { k, list, sequence } => {
                inputs([("k", Some(json!(k))), ("list", Some(json!(list))), ("sequence", path(sequence))])
            }
            Command::Transform { k, max_k, sequence } => {
                inputs([("k", n(k)), ("max_k", n(max_k)), ("sequence", path(sequence))])
            }
            Command::Verify { suite, max_k } => inputs([("suite", Some(json!(suite.name()))), ("max_k", n(max_k))]),
        }
    }
}

/// Executes a parsed command. Errors become error records with their exit code.
pub fn run(cli: &Cli) -> OutputRecord {
    let approx = cli.approx;
    let outcome: Result<OutputRecord, CliError> = match &cli.command {
        Command::Bernoulli { k, max_k, method } => commands::cmd_bernoulli(*k, *max_k, *method, approx),
        Command::Ak { max } => commands::cmd_ak(*max),
        Command::Pk { k, translated, half_scale, basis } => commands::cmd_pk(*k, *translated, *half_scale, *basis),
        Command::ZetaEven { k, max_k } => commands::cmd_zeta_even(*k, *max_k, approx),
        Command::Trees { k, list, sequence } => commands::cmd_trees(*k, *list, sequence.as_deref()),
        Command::Transform { k, max_k, sequence } => commands::cmd_transform(*k, *max_k, sequence.as_deref(), approx),
        Command::Verify { suite, max_k } => verify::cmd_verify(*suite, *max_k),
    };
    outcome.unwrap_or_else(|e| OutputRecord::error(cli.command.name(), cli.command.inputs(), e.to_string(), e.exit_code()))
}
