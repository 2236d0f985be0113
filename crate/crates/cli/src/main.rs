//! `strtree`: encode, decode and manipulate string trees from the shell.

mod commands;
mod io;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use strtree::Traversal;

#[derive(Parser, Debug)]
#[command(name = "strtree", version, about = "Two-bit-per-node string trees")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Paren,
    Edges,
    String,
    Packed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TraversalArg {
    Bfs,
    Dfs,
}

impl From<TraversalArg> for Traversal {
    fn from(t: TraversalArg) -> Self {
        match t {
            TraversalArg::Bfs => Traversal::Bfs,
            TraversalArg::Dfs => Traversal::Dfs,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct Io {
    /// Input file, `-` for standard input
    #[arg(short = 'i', long = "in", default_value = "-")]
    pub input: String,
    /// Output file, `-` for standard output
    #[arg(short = 'o', long = "out", default_value = "-")]
    pub output: String,
    /// Traversal of tree strings; overrides a `B`/`D` tag line in the input
    #[arg(long, value_enum)]
    pub traversal: Option<TraversalArg>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Encode a tree as a tree string
    Encode {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum, default_value = "paren")]
        in_format: Format,
        #[arg(long, value_enum, default_value = "string")]
        out_format: Format,
    },
    /// Decode a tree string into an explicit tree
    Decode {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum, default_value = "string")]
        in_format: Format,
        #[arg(long, value_enum, default_value = "paren")]
        out_format: Format,
    },
    /// Check a tree string; exit 1 with the first error if malformed
    Validate {
        #[command(flatten)]
        io: Io,
    },
    /// Canonical preorder form, identical for trees equal up to sibling order
    Canon {
        #[command(flatten)]
        io: Io,
    },
    /// Levenshtein distance between two tree strings
    Dist {
        /// First tree string file
        a: String,
        /// Second tree string file
        b: String,
        #[arg(long, value_enum)]
        traversal: Option<TraversalArg>,
    },
    /// Apply a sed-style rule s/PATTERN/REPLACEMENT/[g]
    Rewrite {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        rule: String,
        /// Replace every match (same as the `g` flag)
        #[arg(long)]
        global: bool,
    },
    /// Preorder positions whose subtree matches the needle (DFS only)
    Search {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        needle: String,
    },
    /// Replace the leaf at a preorder position with another tree (DFS only)
    Graft {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        position: usize,
        #[arg(long)]
        scion: String,
    },
    /// Tree string to the packed binary format
    Pack {
        #[command(flatten)]
        io: Io,
    },
    /// Packed binary format to tree string
    Unpack {
        #[command(flatten)]
        io: Io,
    },
    /// Uniformly random ordered tree
    Gen {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short = 'o', long = "out", default_value = "-")]
        output: String,
        #[arg(long, value_enum, default_value = "paren")]
        out_format: Format,
        #[arg(long, value_enum)]
        traversal: Option<TraversalArg>,
    },
    /// Every valid tree string of length n, one per line
    Enum {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'o', long = "out", default_value = "-")]
        output: String,
        #[arg(long, value_enum)]
        traversal: Option<TraversalArg>,
    },
    /// Number of unlabelled rooted trees with n nodes
    CountCanon {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value_t = strtree::strops::COUNT_CANONICAL_MAX)]
        max_n: usize,
    },
    /// Node count, depth and leaf count
    Stats {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum, default_value = "string")]
        in_format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(err.exit_code())
        }
    }
}
