mod commands;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use alghyper::hypergraph::DEFAULT_BUDGET;

/// Hypergraphs of finite groups and semigroups.
///
/// Algebra specs: cyclic:<n>, dihedral:<n>, quaternion, klein, sym:<n>,
/// elemab:<p>:<k>, multmod:<n>, fulltrans:<n>, product:(<spec>),(<spec>).
///
/// Exit codes: 0 success, 1 verification failure, 2 usage error,
/// 3 incompatible hypergraph kind, 4 size guard exceeded.
#[derive(Debug, Parser)]
#[command(name = "alghyper", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a hypergraph as canonical JSON.
    Build {
        spec: String,
        /// commuting, power, epower, generating, identity_max or identity_min.
        kind: String,
    },
    /// Degrees, uniformity, regularity and connectivity of a hypergraph.
    Analyze {
        spec: String,
        kind: String,
        #[arg(long)]
        json: bool,
    },
    /// Check a theorem over a registry of algebras; `all` runs every
    /// theorem, `matroid --group <spec>` reports the exchange check for
    /// one generating hypergraph.
    Verify {
        theorem: String,
        #[arg(long)]
        group: Option<String>,
        /// Upper end of the n range for the cyclic-group theorems.
        #[arg(long)]
        max_n: Option<u64>,
        /// Node expansions allowed per Hamiltonian search.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Comma list of registry names (groups16, cyclic60, semigroups,
        /// pgroups, extra, default) and algebra specs.
        #[arg(long)]
        registry: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Maximal chains in the divisor lattice of n and their edge sizes.
    Chains {
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// Least n <= bound with more maximal divisor chains than n.
    SmallestN {
        bound: u64,
        #[arg(long)]
        json: bool,
    },
    /// Write a hypergraph as JSON or as a DOT incidence graph.
    Export {
        spec: String,
        kind: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
