use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "valharm", version, about = "SO(n) decomposition of valuations and certified mixed-volume campaigns")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Conditions,
    Alternating,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Group {
    So,
    O,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the highest weights of Val_i with λ_1 <= cap.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long, default_value_t = 3)]
        cap: i64,
        #[command(flatten)]
        output: Output,
    },
    /// Multiplicity of Γ_λ in Val_i.
    Multiplicity {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        /// Comma list; only the last entry may carry a minus sign.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[command(flatten)]
        output: Output,
    },
    /// Restriction of Γ_λ from SO(n) to SO(n-1).
    Branch {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        output: Output,
    },
    /// dim (Val_i ⊗ Γ)^{SO(n)} for a named module Γ.
    TensorDim {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        i: usize,
        /// trivial, standard, sym:k, lambda-power:k or weight:l1,l2,...
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        #[command(flatten)]
        output: Output,
    },
    /// Symmetry of bivaluations of bidegree (i, i), by the closed form and
    /// from the weights of Val_i.
    Classify {
        #[arg(long)]
        n: usize,
        /// All i in 0..=n when omitted.
        #[arg(long)]
        i: Option<usize>,
        #[arg(long, value_enum, default_value_t = Group::So)]
        group: Group,
        #[command(flatten)]
        output: Output,
    },
    /// Run a verification campaign from a JSON config.
    Verify {
        #[arg(long)]
        config: PathBuf,
        /// Report JSON destination; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the per-trial CSV here.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Override the config seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Override the config trial count.
        #[arg(long)]
        trials: Option<usize>,
    },
    /// Run the acceptance criteria.
    Selftest {
        /// Fewer random trials for the geometric criteria.
        #[arg(long)]
        quick: bool,
        /// Perturb a character before the determinant check.
        #[arg(long, hide = true)]
        tamper: bool,
    },
}
