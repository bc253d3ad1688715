//! Command-line front end: character tables, Clifford classification,
//! Artin conductors, root-conductor bounds and verification sweeps.

pub mod catalog;
pub mod commands;
pub mod report;
pub mod selector;
pub mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::{run, CliError};

#[derive(Parser, Debug)]
#[command(name = "rootcond", version, about = "Exact character tables, Clifford theory and Artin conductor bounds")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Significant digits for decimal renderings.
    #[arg(long, global = true, default_value_t = 12)]
    pub precision: usize,
    /// Order cap for group closure and verification sweeps.
    #[arg(long, global = true, default_value_t = 24)]
    pub max_order: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the character table of a group.
    Table {
        #[arg(long)]
        group: String,
    },
    /// Classify every irreducible character over a normal subgroup of prime index.
    Classify {
        #[arg(long)]
        group: String,
        /// `elements:a,b,..`, `gens:a,b,..`, `derived`, `index:q`, `trivial` or `whole`.
        #[arg(long)]
        normal: String,
    },
    /// Artin conductors of characters in a ramification context.
    Conduct {
        #[arg(long)]
        context: String,
        #[arg(long, conflicts_with_all = ["char_index", "induced"])]
        all: bool,
        /// Table row of a single character.
        #[arg(long = "char")]
        char_index: Option<usize>,
        /// Induce a character from this subgroup (same syntax as `--normal`).
        #[arg(long)]
        induced: Option<String>,
        /// Row of the subgroup's table to induce (default: trivial).
        #[arg(long, default_value_t = 0, requires = "induced")]
        theta: usize,
    },
    /// Root-conductor bounds and the global constant.
    Bound(BoundArgs),
    /// Run verification sweeps.
    Verify {
        /// clifford, gallagher, dichotomy, classification, degrees, conductor, tables or all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// List builtin groups and bundled datasets.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List,
}

#[derive(Args, Debug)]
pub struct BoundArgs {
    #[arg(long, conflicts_with_all = ["disc", "q", "theta_degree", "norm_ftheta", "t"])]
    pub dataset: Option<String>,
    #[arg(long)]
    pub disc: Option<String>,
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub theta_degree: u64,
    #[arg(long)]
    pub norm_ftheta: Option<String>,
    /// Per-degree cap on the norm; defaults to 1.
    #[arg(long)]
    pub t: Option<String>,
}
