use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itdom_core::theorems::SearchMode;

#[derive(Debug, Parser)]
#[command(
    name = "itdom",
    version,
    about = "Exact independent transversal domination invariants and theorem checks for small graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: Option<u32>,

    /// Regenerate catalogs instead of reading the on-disk cache.
    #[arg(long, global = true)]
    pub no_cache: bool,

    /// Catalog cache directory (default: $ITDOM_CACHE_DIR, then the user cache dir).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Write `elapsed_ms` as 0 so reports are byte-for-byte reproducible.
    #[arg(long, global = true)]
    pub no_timing: bool,

    /// Maximum number of maximum independent sets materialized per graph.
    #[arg(long, global = true, default_value_t = itdom_core::invariants::DEFAULT_OMEGA_CAP)]
    pub omega_cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Auto,
    Graph6,
    EdgeList,
}

#[derive(Debug, Args)]
pub struct Source {
    /// Corpus file of graph6 lines or one edge list; `-` reads standard input.
    #[arg(long, conflicts_with_all = ["order", "up_to"])]
    pub corpus: Option<PathBuf>,

    /// Use the catalog of connected graphs of this order (1..=7).
    #[arg(long)]
    pub order: Option<usize>,

    /// Use the catalogs of every order from 1 up to this one.
    #[arg(long, conflicts_with = "order")]
    pub up_to: Option<usize>,

    /// A graph in graph6 (repeatable).
    #[arg(long = "graph", value_name = "GRAPH6")]
    pub graphs: Vec<String>,

    /// How to read `--corpus`.
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub input_format: InputFormat,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute every invariant with witnesses for each input graph.
    Invariants {
        #[command(flatten)]
        source: Source,
    },
    /// Check registry entries; exits 1 if an established result is violated.
    Verify {
        /// Comma-separated ids, or `all`.
        #[arg(long, default_value = "all")]
        theorems: String,
        #[command(flatten)]
        source: Source,
    },
    /// Print the canonical catalog of one order as graph6 lines.
    Generate {
        #[arg(long)]
        order: usize,
        /// Include disconnected graphs.
        #[arg(long)]
        all: bool,
    },
    /// Reproduce the two shipped counterexamples.
    Counterexamples,
    /// Extremal search over the connected catalog of one order.
    Search {
        #[arg(long, value_parser = parse_mode)]
        mode: SearchMode,
        #[arg(long)]
        order: usize,
    },
}

fn parse_mode(s: &str) -> Result<SearchMode, String> {
    s.parse()
}
