//! `qlattice`: batch checks over Hopf algebra structure-constant files.
//! Results go to stdout as JSON. Exit 0 on success, 1 on a counterexample
//! to a claimed theorem, 2 on bad input.

mod commands;
mod input;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qlattice::error::Error;
use qlattice::lattice::Picture;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "qlattice",
    version,
    about = "Exact quantum-subgroup lattices of finite-dimensional Hopf algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Target {
    /// A hopf-sc-v1 file, or `corpus:<name>`
    algebra: String,
    /// `qg` or `dqg`; defaults to the natural picture of the algebra
    #[arg(long)]
    picture: Option<Picture>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf algebra axioms
    Validate { algebra: String },
    /// Dimension, field and structural flags
    Info { algebra: String },
    /// The algebra as a structure-constant file
    Export {
        algebra: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The dual Hopf algebra as a structure-constant file
    Dual {
        algebra: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Grouplike elements and their multiplication table
    Grouplikes { algebra: String },
    /// The partner of a quantum subgroup under the quotient/subalgebra correspondence
    Cd {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        subgroup: String,
    },
    /// Normality with an exact sequence or an adjoint witness
    Normal {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        subgroup: String,
    },
    /// Meet of two quantum subgroups
    Meet {
        #[command(flatten)]
        target: Target,
        #[arg(long = "subgroup", num_args = 1, required = true)]
        subgroups: Vec<String>,
    },
    /// Join of two quantum subgroups
    Join {
        #[command(flatten)]
        target: Target,
        #[arg(long = "subgroup", num_args = 1, required = true)]
        subgroups: Vec<String>,
    },
    /// Largest cocommutative Hopf subalgebra
    CocommMax { algebra: String },
    /// Integrals and the Haar functional
    Haar { algebra: String },
    /// Conditional expectation onto the functions constant on a quantum subgroup
    Expectation {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        subgroup: String,
    },
    /// Second isomorphism theorem for `--subgroup H --subgroup K`, K normal
    SecondIso {
        #[command(flatten)]
        target: Target,
        #[arg(long = "subgroup", num_args = 1, required = true)]
        subgroups: Vec<String>,
        #[arg(long)]
        certify: Option<PathBuf>,
    },
    /// Third isomorphism theorem for `--subgroup N --subgroup H`
    ThirdIso {
        #[command(flatten)]
        target: Target,
        #[arg(long = "subgroup", num_args = 1, required = true)]
        subgroups: Vec<String>,
        #[arg(long)]
        certify: Option<PathBuf>,
    },
    /// Butterfly lemma for `--subgroup A --subgroup A' --subgroup B --subgroup B'`
    Zassenhaus {
        #[command(flatten)]
        target: Target,
        #[arg(long = "subgroup", num_args = 1, required = true)]
        subgroups: Vec<String>,
        #[arg(long)]
        certify: Option<PathBuf>,
    },
    /// Schreier refinement of two series given as comma-separated subgroups
    Refine {
        #[command(flatten)]
        target: Target,
        #[arg(long = "chain", num_args = 1, required = true)]
        chains: Vec<String>,
        #[arg(long)]
        certify: Option<PathBuf>,
    },
    /// Jordan–Hölder equivalence of two composition series
    JordanHolder {
        #[command(flatten)]
        target: Target,
        #[arg(long = "chain", num_args = 1, required = true)]
        chains: Vec<String>,
        #[arg(long)]
        certify: Option<PathBuf>,
    },
    /// Modular law for `--subgroup H --subgroup L --subgroup M`, L ≤ H
    Modular {
        #[command(flatten)]
        target: Target,
        #[arg(long = "subgroup", num_args = 1, required = true)]
        subgroups: Vec<String>,
        /// Record failures instead of treating them as counterexamples
        #[arg(long)]
        survey: bool,
    },
    /// List the built-in algebras
    Corpus {
        /// Run the modular-law survey on every group-derived ambient
        #[arg(long)]
        survey: bool,
    },
    /// Re-verify a certificate written by `--certify`
    VerifyCert { path: PathBuf },
}

/// A command result: the JSON document and whether it exhibits a
/// counterexample.
pub struct Outcome {
    pub body: serde_json::Value,
    pub violation: bool,
}

impl From<serde_json::Value> for Outcome {
    fn from(body: serde_json::Value) -> Self {
        Outcome {
            body,
            violation: false,
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    use commands::*;
    match cli.command {
        Command::Validate { algebra } => validate(&algebra),
        Command::Info { algebra } => info(&algebra),
        Command::Export { algebra, out } => export(&algebra, out.as_deref(), false),
        Command::Dual { algebra, out } => export(&algebra, out.as_deref(), true),
        Command::Grouplikes { algebra } => grouplikes(&algebra),
        Command::Cd { target, subgroup } => cd(&target.algebra, target.picture, &subgroup),
        Command::Normal { target, subgroup } => normal(&target.algebra, target.picture, &subgroup),
        Command::Meet { target, subgroups } => {
            lattice_op(&target.algebra, target.picture, &subgroups, true)
        }
        Command::Join { target, subgroups } => {
            lattice_op(&target.algebra, target.picture, &subgroups, false)
        }
        Command::CocommMax { algebra } => cocomm_max(&algebra),
        Command::Haar { algebra } => haar(&algebra),
        Command::Expectation { target, subgroup } => {
            expectation(&target.algebra, target.picture, &subgroup)
        }
        Command::SecondIso {
            target,
            subgroups,
            certify,
        } => second_iso(
            &target.algebra,
            target.picture,
            &subgroups,
            certify.as_deref(),
        ),
        Command::ThirdIso {
            target,
            subgroups,
            certify,
        } => third_iso(
            &target.algebra,
            target.picture,
            &subgroups,
            certify.as_deref(),
        ),
        Command::Zassenhaus {
            target,
            subgroups,
            certify,
        } => zassenhaus(
            &target.algebra,
            target.picture,
            &subgroups,
            certify.as_deref(),
        ),
        Command::Refine {
            target,
            chains,
            certify,
        } => refine(
            &target.algebra,
            target.picture,
            &chains,
            certify.as_deref(),
            false,
        ),
        Command::JordanHolder {
            target,
            chains,
            certify,
        } => refine(
            &target.algebra,
            target.picture,
            &chains,
            certify.as_deref(),
            true,
        ),
        Command::Modular {
            target,
            subgroups,
            survey,
        } => modular(&target.algebra, target.picture, &subgroups, survey),
        Command::Corpus { survey } => corpus(survey),
        Command::VerifyCert { path } => verify_cert(&path),
    }
}

fn main() -> ExitCode {
    let outcome = run(Cli::parse());
    let (body, code) = match outcome {
        Ok(o) => (o.body, if o.violation { 1 } else { 0 }),
        Err(e) => {
            eprintln!("qlattice: {e}");
            let code = if e.is_theorem_violation() { 1 } else { 2 };
            (
                json!({ "error": { "kind": render::error_kind(&e), "message": e.to_string() } }),
                code,
            )
        }
    };
    // a closed pipe downstream is not an error of ours
    let text = serde_json::to_string_pretty(&body).expect("json");
    let _ = writeln!(std::io::stdout(), "{text}");
    ExitCode::from(code)
}
