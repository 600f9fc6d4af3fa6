use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "mincodes", version, about = "Build, verify and use minimal linear codes")]
pub struct Cli {
    /// Emit JSON instead of the human-readable report.
    #[arg(long, global = true)]
    pub json: bool,

    /// Maximum number of codewords any single enumeration may visit.
    #[arg(long, global = true, default_value_t = mincodes::Budget::DEFAULT.0)]
    pub budget: u64,

    /// Include wall-clock timings (reports are then no longer reproducible).
    #[arg(long, global = true)]
    pub timings: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the generator matrix of a named construction.
    Construct(ConstructArgs),
    /// Minimality, AB ratio, full-value property and weight distribution.
    Analyze(AnalyzeArgs),
    /// Weight distribution as CSV `weight,count`.
    Distribution(DistributionArgs),
    /// Lift a minimal code with the full-value property to a longer one.
    Lift(LiftArgs),
    /// Code generated by the Kronecker product of two generators.
    Tensor(TensorArgs),
    /// Massey secret sharing.
    #[command(subcommand)]
    Sss(SssCommand),
    /// Run a batch of verification checks from a TOML file.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    First,
    Second,
    Weights,
    Extended,
    Cf,
    Cg,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub family: FamilyName,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub q: u32,
    /// Block length for `cg`.
    #[arg(long)]
    pub r: Option<usize>,
    /// Number of variables for `cf`.
    #[arg(long)]
    pub n: Option<usize>,
    /// Comma-separated nonzero values for `cf`.
    #[arg(long, value_delimiter = ',')]
    pub alphas: Vec<u32>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Exit 2 unless the code is minimal.
    #[arg(long)]
    pub expect_minimal: bool,
    /// Exit 2 unless every nonzero codeword takes all q values.
    #[arg(long)]
    pub expect_full_value: bool,
}

#[derive(Debug, Args)]
pub struct DistributionArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Also write the CSV to this file.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LiftArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub s: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Skip the minimality and full-value checks on the input.
    #[arg(long)]
    pub unchecked: bool,
}

#[derive(Debug, Args)]
pub struct TensorArgs {
    #[arg(long)]
    pub in1: PathBuf,
    #[arg(long)]
    pub in2: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SchemeArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// 1-based column that carries the secret.
    #[arg(long, default_value_t = 1)]
    pub secret_column: usize,
}

#[derive(Debug, Subcommand)]
pub enum SssCommand {
    /// Deal shares of a secret.
    Deal {
        #[command(flatten)]
        scheme: SchemeArgs,
        #[arg(long)]
        secret: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Recover the secret from the shares of a coalition.
    Reconstruct {
        #[command(flatten)]
        scheme: SchemeArgs,
        /// Participant labels (column indices), comma-separated.
        #[arg(long, value_delimiter = ',', required = true)]
        subset: Vec<usize>,
        /// Their shares, in the same order.
        #[arg(long, value_delimiter = ',', required = true)]
        shares: Vec<u32>,
    },
    /// List the minimal authorized coalitions.
    Access {
        #[command(flatten)]
        scheme: SchemeArgs,
        #[arg(long, value_enum, default_value_t = Method::Search)]
        method: Method,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Dual,
    Search,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Sweep file; the bundled default when omitted.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Stop at the first instance with a failing check.
    #[arg(long)]
    pub strict: bool,
    /// Write the weight distributions as CSV `instance,weight,count`.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}
