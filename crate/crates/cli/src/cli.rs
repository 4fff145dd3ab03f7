use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "kappa", version, about = "κ-deformed functions, series and decay-equation solvers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one κ-function and print it with 17 significant digits.
    Eval(EvalArgs),
    /// Solve the decay or logistic problem and write the trace.
    Solve(SolveArgs),
    /// Write series coefficients as JSON.
    Series(SeriesArgs),
    /// Error tables, convergence orders and series error curves.
    Compare(CompareArgs),
    /// Slope field of the decay equation on a rectangular grid.
    SlopeField(SlopeFieldArgs),
    /// Logistic closed form against a numerical method.
    Logistic(LogisticArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Exp,
    Ln,
    Sum,
    Product,
    Weight,
    /// arsinh(κx)/κ
    Knum,
    /// sinh(κx)/κ
    Dual,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long = "fn", value_enum)]
    pub function: Function,
    #[arg(long, allow_negative_numbers = true)]
    pub kappa: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub x: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub y: Option<f64>,
    /// Let `product` fall back to x·y at κ = 0.
    #[arg(long)]
    pub classical_limit: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProblemKind {
    Decay,
    Logistic,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Output file; relative paths resolve against $KAPPA_OUT_DIR. Standard
    /// output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ProblemArgs {
    #[arg(long, value_enum, default_value = "decay")]
    pub problem: ProblemKind,
    #[arg(long, default_value_t = 0.9, allow_negative_numbers = true)]
    pub kappa: f64,
    /// Decay rate.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub beta: f64,
    /// Initial value: f(0) for both problems (default 1 for decay, ½ for logistic).
    #[arg(long, allow_negative_numbers = true)]
    pub f0: Option<f64>,
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    pub x_max: f64,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// analytic, euler, ab2 or rk4.
    #[arg(long, default_value = "rk4")]
    pub method: String,
    #[arg(long, default_value_t = 0.01, allow_negative_numbers = true)]
    pub h: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesTarget {
    Exp,
    Ln1p,
    Decay,
    Picard,
    Sqrt,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub target: SeriesTarget,
    #[arg(long, default_value_t = 8)]
    pub order: usize,
    #[arg(long, default_value_t = 0.9, allow_negative_numbers = true)]
    pub kappa: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Comma-separated numerical methods.
    #[arg(long, default_value = "euler,ab2,rk4")]
    pub methods: String,
    /// Comma-separated step sizes; three or more decreasing values also
    /// produce fitted convergence orders.
    #[arg(long, default_value = "0.01")]
    pub h_ladder: String,
    /// Comma-separated truncation orders for the power-series error curve.
    #[arg(long)]
    pub series_orders: Option<String>,
    /// Number of x samples in [0, x_max] for the series error curve.
    #[arg(long, default_value_t = 101)]
    pub series_points: usize,
    /// Output directory; defaults to $KAPPA_OUT_DIR, then `.`.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SlopeFieldArgs {
    #[arg(long, default_value_t = 0.9, allow_negative_numbers = true)]
    pub kappa: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    pub x_max: f64,
    #[arg(long, default_value_t = 21)]
    pub nx: usize,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub f_min: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub f_max: f64,
    #[arg(long, default_value_t = 21)]
    pub nf: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct LogisticArgs {
    #[arg(long, default_value_t = 0.9, allow_negative_numbers = true)]
    pub kappa: f64,
    #[arg(long, default_value = "rk4")]
    pub method: String,
    #[arg(long, default_value_t = 0.01, allow_negative_numbers = true)]
    pub h: f64,
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    pub x_max: f64,
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    pub f0: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}
