use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact power-series solutions of a_m w^(m) + ... + a_1 w' + a_0 w = f.
///
/// Operator coefficients are given constant term first: `--op "a0,a1,...,am"`.
#[derive(Debug, Parser)]
#[command(name = "formalode", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients c_0..c_N of 1/P(t).
    Coeffs(CoeffsArgs),
    /// Solve P(D) w = f in power series.
    Solve(SolveArgs),
    /// Fundamental solution E with P(D) E = 1/x.
    Fundamental(FundamentalArgs),
    /// Hurwitz product of a Laurent tail with a power series or another tail.
    Convolve(ConvolveArgs),
    /// Solve P(D) w = g for a Laurent tail g.
    LaurentSolve(LaurentSolveArgs),
    /// Check a stored solution by substitution.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RingKind {
    Rational,
    Padic,
}

#[derive(Debug, Clone, Args)]
pub struct RingArgs {
    #[arg(long, value_enum, default_value = "rational")]
    pub ring: RingKind,
    /// Prime p for `--ring padic`.
    #[arg(long)]
    pub prime: Option<u64>,
    /// Absolute precision M for `--ring padic` (residues mod p^M).
    #[arg(long)]
    pub precision: Option<u32>,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<String>,
}

#[derive(Debug, Clone, Args)]
#[group(multiple = false)]
pub struct RhsArgs {
    /// Polynomial right-hand side, constant term first ("5,2" is 5 + 2x).
    /// For laurent-solve: coefficients of x^-1, x^-2, ...
    #[arg(long, allow_hyphen_values = true)]
    pub rhs: Option<String>,
    /// Right-hand side as a JSON series file.
    #[arg(long)]
    pub rhs_file: Option<String>,
    /// Infinite right-hand side: ones | geometric(r) | constant(c).
    #[arg(long)]
    pub generator: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct CoeffsArgs {
    #[command(flatten)]
    pub ring: RingArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub op: String,
    /// Last index N.
    #[arg(long)]
    pub order: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub ring: RingArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub op: String,
    #[command(flatten)]
    pub rhs: RhsArgs,
    /// Output order N (p-adic); defaults to 10.
    #[arg(long)]
    pub order: Option<usize>,
    /// Substitute the solution back and report the comparison.
    #[arg(long)]
    pub verify: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct FundamentalArgs {
    #[command(flatten)]
    pub ring: RingArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub op: String,
    /// Number of coefficients x^-1..x^-depth. Defaults to the tail cutoff for p-adic rings.
    #[arg(long)]
    pub depth: Option<usize>,
    #[arg(long)]
    pub verify: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ConvolveArgs {
    /// Left factor: a Laurent-tail series file.
    pub b_file: String,
    /// Right factor: a power-series or Laurent-tail series file.
    pub f_file: String,
    /// Output order for a power-series right factor.
    #[arg(long)]
    pub order: Option<usize>,
    /// Output depth for a Laurent right factor.
    #[arg(long)]
    pub depth: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct LaurentSolveArgs {
    #[command(flatten)]
    pub ring: RingArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub op: String,
    #[command(flatten)]
    pub rhs: RhsArgs,
    #[arg(long)]
    pub depth: Option<usize>,
    #[arg(long)]
    pub verify: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub ring: RingArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub op: String,
    /// Series file (or a solve report) holding the candidate solution.
    #[arg(long)]
    pub solution: String,
    #[command(flatten)]
    pub rhs: RhsArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}
