//! Command-line driver: subcommands build a [`Report`] that renders as
//! JSON, CSV or text. Identical inputs give byte-identical reports.

pub mod accept;
mod commands;
mod input;
pub mod report;

use std::path::PathBuf;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};

pub use report::{Caps, Format, Report};

pub const DEFAULT_ORDER_CAP: usize = 64;

/// Exit status: verification passed.
pub const EXIT_PASS: i32 = 0;
/// Exit status: a checked identity failed.
pub const EXIT_FAIL: i32 = 1;
/// Exit status: unreadable input, bad spec or exceeded cap.
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "twotrace", version, about = "Exact 2-character and twisted-algebra computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Seed for randomized sweeps; recorded in every report.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest group order accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    pub cap_order: usize,
    /// Highest Hochschild degree computed.
    #[arg(long, global = true, default_value_t = twotrace::hochschild::DEFAULT_MAX_DEGREE)]
    pub max_degree: usize,
}

#[derive(Debug, Args, Clone, Default)]
pub struct Target {
    /// Builder name such as Z4, S3, D4, Q8 or Z2xZ2.
    #[arg(long)]
    pub group: Option<String>,
    #[arg(long)]
    pub modulus: Option<u32>,
    /// JSON input file; repeat for commands taking two.
    #[arg(long)]
    pub input: Vec<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Group builders and conjugacy data.
    Group {
        #[command(subcommand)]
        action: GroupCmd,
    },
    /// 2-cocycles with values in roots of unity.
    Cocycle {
        #[command(subcommand)]
        action: CocycleCmd,
    },
    /// 2-representations on Vect^m.
    Tworep {
        #[command(subcommand)]
        action: TworepCmd,
    },
    /// Finite-dimensional algebras and group actions on them.
    Algebra {
        #[command(subcommand)]
        action: AlgebraCmd,
    },
    /// Hochschild cohomology in low degrees.
    Hh {
        #[command(subcommand)]
        action: HhCmd,
    },
    /// Regular classes, twisted centers and character sums for every cocycle.
    Schur(Target),
    /// Validation, character table and invariants of a 2-representation.
    Report(Target),
    /// Run the acceptance suite.
    Accept,
}

#[derive(Debug, Subcommand)]
pub enum GroupCmd {
    Info(Target),
    Table(Target),
    Classes(Target),
    Commuting(Target),
}

#[derive(Debug, Subcommand)]
pub enum CocycleCmd {
    Validate(Target),
    Enumerate(Target),
    Regular(Target),
    Chi(Target),
}

#[derive(Debug, Subcommand)]
pub enum TworepCmd {
    Validate(Target),
    Character(Target),
    ChiTable(Target),
    Boxprod(Target),
    Innerprod(Target),
    TwistedAlgebra(Target),
}

#[derive(Debug, Subcommand)]
pub enum AlgebraCmd {
    Center(Target),
    Crossed(Target),
    Decompose(Target),
    Schur(Target),
    Kunneth(Target),
    Adjunction(Target),
}

#[derive(Debug, Subcommand)]
pub enum HhCmd {
    Dims {
        #[command(flatten)]
        target: Target,
        /// Use the normalized cochain complex.
        #[arg(long)]
        normalized: bool,
    },
    Kunneth(Target),
    Orbifold(Target),
}

impl Cli {
    pub fn caps(&self) -> Caps {
        Caps {
            group_order: self.cap_order,
            max_degree: self.max_degree,
            hh_cochain_cap: twotrace::hochschild::DEFAULT_CAP,
        }
    }
}

/// Runs a parsed command line, returning the rendered report and the exit
/// status. Errors are input errors.
pub fn run(cli: &Cli) -> Result<(String, i32)> {
    let report = commands::dispatch(cli)?;
    let code = if report.passed { EXIT_PASS } else { EXIT_FAIL };
    Ok((report.render(cli.format)?, code))
}
