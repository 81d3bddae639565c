//! Command-line front end: configuration, reports and the subcommands of
//! the `ballquot` binary.

pub mod commands;
pub mod config;
pub mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

pub use commands::{cmd_constants, cmd_check_all};
pub use config::{ConfigError, OutputFormat, Overrides, RunConfig, DATA_ENV};
pub use report::{Check, Report, Source, Status, SCHEMA_VERSION};

use crate::fpgroup::{BjVariant, Presentation};

#[derive(Debug, Parser)]
#[command(name = "ballquot", version, about = "Covolume bounds, Deligne-Mostow orbifolds and Hurwitz ball quotients")]
pub struct Cli {
    /// TOML configuration file
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// working precision, e.g. 1e-12
    #[arg(long, global = true)]
    pub eps: Option<String>,
    #[arg(long, global = true)]
    pub max_cosets: Option<usize>,
    /// node budget for homomorphism searches
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// directory overriding the embedded data files
    #[arg(long, global = true)]
    pub data_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// shorthand for --format json
    #[arg(long, global = true)]
    pub json: bool,
    /// include the long homology computations
    #[arg(long, global = true)]
    pub stretch: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Discriminant bounds and class-number bounds
    Bounds {
        #[arg(long)]
        n: Option<u32>,
        /// evaluate a single bound at this delta
        #[arg(long)]
        delta: Option<String>,
    },
    /// Run the elimination cascade over all commensurability classes
    Search {
        /// treat every class number bound as 1
        #[arg(long)]
        force_h1: bool,
    },
    /// Deligne-Mostow tuples and orbifold Euler characteristics
    Dm {
        #[command(subcommand)]
        command: DmCommand,
    },
    /// Finitely presented groups and their finite quotients
    Group {
        #[command(subcommand)]
        command: GroupCommand,
    },
    /// Numerical invariants of a smooth ball quotient
    Surface {
        /// Euler number
        #[arg(long)]
        e: Option<String>,
        /// genus for the Hurwitz bound of a curve
        #[arg(long)]
        genus: Option<i64>,
    },
    /// Run every check in order and report pass/fail for each
    PaperCheck,
    /// Quoted numeric constants against recomputed intervals
    Constants,
}

#[derive(Debug, Subcommand)]
pub enum DmCommand {
    /// INT and ΣINT for a tuple such as "(2,2,2,7,11)/12"
    Tuple { tuple: String },
    /// Orbifold Euler characteristic of the (2,2,2,7,11)/12 orbifold
    Euler,
    /// Euler characteristic of the (p,q,r) triangle orbifold
    Triangle { p: u64, q: u64, r: u64 },
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
pub enum VariantArg {
    Square,
    Cube,
}

#[derive(Debug, clap::Args)]
pub struct PresentationArgs {
    /// JSON presentation {generators, relators}; defaults to Γ
    #[arg(long)]
    pub presentation: Option<PathBuf>,
    /// reading of the (bj) relator of Γ
    #[arg(long, value_enum, default_value = "square")]
    pub variant: VariantArg,
}

impl PresentationArgs {
    fn load(&self) -> Result<Presentation, String> {
        match &self.presentation {
            Some(p) => Presentation::load(p).map_err(|e| e.to_string()),
            None => Ok(Presentation::gamma_variant(match self.variant {
                VariantArg::Square => BjVariant::Square,
                VariantArg::Cube => BjVariant::Cube,
            })),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum GroupCommand {
    /// Abelian invariants
    Abelianize {
        #[command(flatten)]
        pres: PresentationArgs,
    },
    /// Coset enumeration of the subgroup presented by the relators in the listed generators
    Tc {
        #[command(flatten)]
        pres: PresentationArgs,
        /// comma-separated generator names, e.g. j,u,v
        #[arg(long, value_delimiter = ',')]
        subgroup: Vec<String>,
    },
    /// Surjections onto a shipped finite group, up to automorphisms
    Homsearch {
        #[command(flatten)]
        pres: PresentationArgs,
        #[arg(long, default_value = "psu33xz3")]
        target: String,
        /// "auto", "none" or e.g. "b=3,j=12,u=4,v=8"
        #[arg(long, default_value = "auto")]
        orders: String,
    },
    /// The surface with automorphism group PSU(3,3) x Z/3
    VerifyS1,
    /// The surface with automorphism group PSU(3,3) x A4
    VerifyS2,
    /// The order-21 Frobenius subgroup of PSU(3,3)
    Frob21,
    /// List the shipped target groups
    Target {
        #[arg(long)]
        list: bool,
    },
}

impl Cli {
    pub fn overrides(&self) -> Overrides {
        Overrides {
            eps: self.eps.clone(),
            max_cosets: self.max_cosets,
            hom_search_budget: self.budget,
            data_dir: self.data_dir.clone(),
            output_format: if self.json { Some(OutputFormat::Json) } else { self.format },
            stretch: self.stretch,
        }
    }
}

/// Runs a parsed command line. Exit codes: 0 when every check passes, 1 on
/// a failed check, 2 on usage or data errors.
pub fn run(cli: Cli) -> ExitCode {
    let cfg = match RunConfig::resolve(cli.config.as_deref(), &cli.overrides()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    };
    let report = match dispatch(&cfg, &cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    print!("{}", report.render(cfg.output_format));
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn dispatch(cfg: &RunConfig, cmd: &Command) -> Result<Report, String> {
    use commands::*;
    Ok(match cmd {
        Command::Bounds { n, delta } => cmd_bounds(cfg, *n, delta.as_deref()),
        Command::Search { force_h1 } => cmd_search(cfg, *force_h1),
        Command::Dm { command } => match command {
            DmCommand::Tuple { tuple } => cmd_dm_tuple(tuple),
            DmCommand::Euler => cmd_dm_euler(),
            DmCommand::Triangle { p, q, r } => cmd_dm_triangle([*p, *q, *r]),
        },
        Command::Group { command } => match command {
            GroupCommand::Abelianize { pres } => cmd_abelianize(&pres.load()?),
            GroupCommand::Tc { pres, subgroup } => cmd_tc(&pres.load()?, subgroup, cfg.max_cosets),
            GroupCommand::Homsearch { pres, target, orders } => {
                if !crate::finitegrp::TARGET_NAMES.contains(&target.as_str()) {
                    return Err(format!("unknown target {target:?}; known: {}", crate::finitegrp::TARGET_NAMES.join(", ")));
                }
                cmd_homsearch(cfg, &pres.load()?, target, orders, None)
            }
            GroupCommand::VerifyS1 => cmd_verify(cfg, 1),
            GroupCommand::VerifyS2 => cmd_verify(cfg, 2),
            GroupCommand::Frob21 => {
                let mut r = Report::new("group frob21");
                r.timed("frob21", || frobenius_checks(None, false));
                r
            }
            GroupCommand::Target { .. } => cmd_targets(),
        },
        Command::Surface { e, genus } => cmd_surface(cfg, e.as_deref(), *genus),
        Command::PaperCheck => cmd_check_all(cfg),
        Command::Constants => cmd_constants(cfg),
    })
}

/// Entry point for the binary.
pub fn main_from_env() -> ExitCode {
    run(Cli::parse())
}
