// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! `oddimm`: construct, lift, search and verify totally odd strong clique
//! immersions in line graphs.
//!
//! Exit status: 0 success or pass, 1 failure or negative answer, 2 usage or
//! input error, 3 budget exhausted.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "oddimm", version, about = "Totally odd strong clique immersions in line graphs")]
pub struct Cli {
    /// Output format for reports
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Branch-node budget for each exact search
    #[arg(long, global = true, env = "ODDIMM_BUDGET", default_value_t = 10_000_000)]
    pub budget: u64,
    #[command(subcommand)]
    pub command: Command,
}

/// Property overrides; the default depends on the subcommand.
#[derive(Debug, Clone, Copy, Args)]
pub struct PropertyFlags {
    /// Require terminals not to be interior to any path
    #[arg(long, conflicts_with = "weak")]
    pub strong: bool,
    /// Allow terminals inside paths
    #[arg(long)]
    pub weak: bool,
    /// Require every path to have odd length
    #[arg(long, conflicts_with = "any_parity")]
    pub odd: bool,
    /// Accept paths of any length
    #[arg(long)]
    pub any_parity: bool,
}

impl PropertyFlags {
    /// `(strong, odd)` with the given defaults for unset pairs.
    pub fn resolve(&self, strong: bool, odd: bool) -> (bool, bool) {
        let s = if self.strong { true } else if self.weak { false } else { strong };
        let o = if self.odd { true } else if self.any_parity { false } else { odd };
        (s, o)
    }
}

/// Host graph of `verify` and `search`.
#[derive(Debug, Clone, Args)]
pub struct HostArgs {
    pub graph: PathBuf,
    /// The graph file holds H; the host is L(H)
    #[arg(long)]
    pub line: bool,
    /// With --line, use L(mH)
    #[arg(long, default_value_t = 1)]
    pub multiply: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Line graph of a multigraph, optionally after multiplying every edge
    Linegraph {
        graph: PathBuf,
        /// Replace every edge by this many parallel edges first
        #[arg(long, default_value_t = 1)]
        multiply: usize,
    },
    /// Exact chromatic index with a coloring witness
    ChiIndex { graph: PathBuf },
    /// Exact chromatic number with a coloring witness
    Chi { graph: PathBuf },
    /// Edge-critical subgraph of a class-2 graph
    Critical {
        graph: PathBuf,
        /// Reduce class-1 graphs too, preserving the chromatic index
        #[arg(long)]
        any_class: bool,
    },
    /// Two vertices joined by max-degree many edge-disjoint paths
    Thomassen { graph: PathBuf },
    /// Certificate for L(H) of a clique immersion of order chi(L(H))
    Construct {
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Lift a certificate on L(H) to L(mH)
    Blowup {
        graph: PathBuf,
        cert: PathBuf,
        #[arg(short, long)]
        m: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a certificate against a host graph
    Verify {
        #[command(flatten)]
        host: HostArgs,
        cert: PathBuf,
        #[command(flatten)]
        props: PropertyFlags,
        /// Expected clique order; defaults to the certificate's
        #[arg(long)]
        t: Option<usize>,
    },
    /// Exhaustive search for a clique immersion
    Search {
        #[command(flatten)]
        host: HostArgs,
        #[arg(long, required_unless_present = "terminals")]
        t: Option<usize>,
        /// Fixed terminal set, comma separated
        #[arg(long, value_delimiter = ',')]
        terminals: Vec<usize>,
        #[command(flatten)]
        props: PropertyFlags,
        /// Wall-clock limit in seconds
        #[arg(long)]
        time_limit: Option<f64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the search at t = chi(G) over a stream of graphs
    Scan {
        /// graph6 corpus files, or single graphs in the text format
        #[arg(long, required_unless_present_any = ["generate", "random"])]
        corpus: Vec<PathBuf>,
        /// All connected graphs on 1..=N vertices, up to isomorphism
        #[arg(long)]
        generate: Option<usize>,
        /// This many seeded random graphs, edge count uniform
        #[arg(long)]
        random: Option<usize>,
        /// Vertices per random graph
        #[arg(long, default_value_t = 7, requires = "random")]
        vertices: usize,
        #[arg(long, default_value_t = 1, requires = "random")]
        seed: u64,
        /// With --generate, include disconnected graphs
        #[arg(long)]
        all: bool,
        /// Scan the line graph of every input graph
        #[arg(long)]
        line: bool,
        #[arg(long)]
        workers: Option<usize>,
        #[command(flatten)]
        props: PropertyFlags,
        #[arg(long)]
        time_limit: Option<f64>,
    },
    /// Planar flower graph whose leaves carry a totally odd K_t immersion
    Flower {
        t: usize,
        /// Extra pairs of subdivision vertices per strand
        #[arg(long, default_value_t = 0)]
        padding: usize,
        /// Keep the even-parity skeleton
        #[arg(long)]
        no_parity_fix: bool,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
