use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "rigidph",
    version,
    about = "Persistence barcodes and terminal-simplex rigidity"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Common {
    /// Prime coefficient field.
    #[arg(long, global = true, default_value_t = 2)]
    pub field: u32,
    /// Emit a single JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Maximum number of orders the exhaustive oracle may examine.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub cap: usize,
    /// Worker threads for the oracle.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a filtration file and report its injectivity radius.
    Check { file: PathBuf },
    /// Barcode with birth and terminal simplices.
    Barcode {
        file: PathBuf,
        /// Only this dimension (default: all).
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Birth, termination scale and terminal simplex of a cycle.
    Lifespan {
        file: PathBuf,
        #[arg(long)]
        cycle: String,
    },
    /// Certified terminal-rigidity radius of a cycle.
    Rigidity {
        file: PathBuf,
        #[arg(long)]
        cycle: String,
    },
    /// All terminal simplices reachable by epsilon-perturbations.
    Sigma {
        file: PathBuf,
        #[arg(long)]
        cycle: String,
        #[arg(long)]
        epsilon: String,
        /// List every realizable order with its terminal simplex.
        #[arg(long)]
        all_witnesses: bool,
    },
    /// Where terminal rigidity first breaks, and how.
    Breaking {
        file: PathBuf,
        #[arg(long)]
        cycle: String,
    },
    /// Check the bar rigidity hypotheses for one bar.
    BarRigidity {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
        /// Bar endpoints `a,b`.
        #[arg(long)]
        bar: String,
        #[arg(long)]
        epsilon: String,
        /// A perturbed filtration in which to locate the matching bar.
        #[arg(long)]
        against: Option<PathBuf>,
    },
    /// Write a perturbed filtration that reorders chosen simplices.
    Perturb {
        file: PathBuf,
        /// Two simplices `σ1,σ2` with f(σ1) < f(σ2); vertices separated by
        /// spaces, e.g. "0 1,1 2" or "[0,1],[1,2]".
        #[arg(long, conflicts_with_all = ["block", "perm"])]
        swap: Option<String>,
        /// A value-sorted block of same-dimension simplices.
        #[arg(long, requires = "perm")]
        block: Option<String>,
        /// Target order of the block as 0-based indices, e.g. "2,1,0".
        #[arg(long, requires = "block")]
        perm: Option<String>,
        #[arg(long)]
        epsilon: String,
        #[arg(long)]
        out: PathBuf,
        /// Report where this bar `a,b` of the input ends up.
        #[arg(long, requires = "dim")]
        bar: Option<String>,
        #[arg(long)]
        dim: Option<usize>,
    },
}
