use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "irrspec",
    version,
    about = "Internal-rate-of-return spectra for price series"
)]
pub struct Cli {
    /// Cap on worker threads; results do not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Market IRR transform: p(rho) and I(rho) = rho * p(rho).
    Irr(IrrArgs),
    /// Golden Cross / Dead Cross strategy spectrum.
    Strategy(StrategyArgs),
    /// Log-return histogram, or the difference of two.
    Logret(LogretArgs),
    /// Tau-series difference spectra between two markets.
    Leadlag(LeadlagArgs),
    /// Synthetic GBM or lagged-copy series.
    Synth(SynthArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long, default_value_t = 0.0)]
    pub rho_min: f64,
    #[arg(long, default_value_t = 0.05)]
    pub rho_max: f64,
    #[arg(long, default_value_t = 200)]
    pub steps: usize,
}

#[derive(Debug, Args)]
pub struct IrrArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Minimal holding period in ticks.
    #[arg(long, default_value_t = 0)]
    pub tau: usize,
    #[arg(long)]
    pub output: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PairingMode {
    /// Random start ticks, first buy then first sell after it.
    Mc,
    /// One sequential pass over all signals.
    Scan,
}

#[derive(Debug, Args)]
pub struct StrategyArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Short moving-average window S.
    #[arg(short = 'S', long = "short", default_value_t = 5)]
    pub short: usize,
    /// Long moving-average window L.
    #[arg(short = 'L', long = "long", default_value_t = 25)]
    pub long: usize,
    #[arg(long, value_enum, default_value_t = PairingMode::Mc)]
    pub mode: PairingMode,
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = -0.05, allow_hyphen_values = true)]
    pub bin_min: f64,
    #[arg(long, default_value_t = 0.05, allow_hyphen_values = true)]
    pub bin_max: f64,
    #[arg(long, default_value_t = 200)]
    pub bins: usize,
    /// Fold out-of-range rates into the edge bins instead of failing.
    #[arg(long)]
    pub clamp: bool,
    #[arg(long)]
    pub output: PathBuf,
    /// Optional audit file with every transaction.
    #[arg(long)]
    pub transactions: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    /// 101 bins over [-0.005, 0.005].
    Minute,
    /// 101 bins over [-0.05, 0.05].
    Daily,
}

#[derive(Debug, Args)]
pub struct LogretArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Second series; when given, writes the difference input - input-b.
    #[arg(long)]
    pub input_b: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Scale::Daily)]
    pub scale: Scale,
    /// Custom binning; overrides --scale when all three are given.
    #[arg(long, allow_hyphen_values = true, requires_all = ["bin_max", "bins"])]
    pub bin_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true, requires_all = ["bin_min", "bins"])]
    pub bin_max: Option<f64>,
    #[arg(long, requires_all = ["bin_min", "bin_max"])]
    pub bins: Option<usize>,
    #[arg(long)]
    pub normalize: bool,
    /// Node floor: |delta| <= epsilon counts as zero.
    #[arg(long, default_value_t = 0.0)]
    pub epsilon: f64,
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct LeadlagArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub input_b: PathBuf,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long, value_delimiter = ',', default_value = "0,3,6,9,12,15")]
    pub taus: Vec<usize>,
    /// Node floor relative to the largest |I| at each tau.
    #[arg(long, default_value_t = 1e-6)]
    pub node_floor: f64,
    /// Report JSON; per-tau CSVs are written next to it.
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Gbm,
    Lagged,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[arg(long, value_enum, default_value_t = Kind::Gbm)]
    pub kind: Kind,
    #[arg(long, default_value_t = 1000)]
    pub n: usize,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub mu: f64,
    #[arg(long, default_value_t = 0.01)]
    pub sigma: f64,
    #[arg(long, default_value_t = 1)]
    pub lag: usize,
    #[arg(long, default_value_t = 0.0)]
    pub noise: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Series to copy for `--kind lagged`; without it the leader is the
    /// GBM drawn from the same seed.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Write a `timestamp,price` header row.
    #[arg(long)]
    pub header: bool,
    #[arg(long)]
    pub output: PathBuf,
}
