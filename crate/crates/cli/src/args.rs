use clap::{Args, Parser, Subcommand, ValueEnum};

/// Inhomogeneous q-Whittaker polynomials: expansions, structure constants,
/// identity checks, specializations and partition measures.
///
/// Partitions are written as comma-separated parts (`3,1`); the empty
/// partition is `""`, `0` or `∅`. Scalars given as `p/q` or integers are
/// exact; decimals switch to floating point.
///
/// Set IQW_THREADS to cap the worker pool.
#[derive(Parser, Debug)]
#[command(name = "iqw", version)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand or evaluate a family member in finitely many variables.
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Structure constants of F_mu F_nu in the F basis.
    Product(ProductArgs),
    /// F_(1) F_nu by the Pieri rule.
    Pieri(PieriArgs),
    /// Expansion of a skew F in the F basis.
    SkewExpand(SkewArgs),
    /// Truncated change of basis between W and F.
    Basis(BasisArgs),
    /// Run identity checks; exits 1 with a witness on failure.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Values of positive specializations.
    #[command(subcommand)]
    Spec(SpecCmd),
    /// Tabulate or sample the induced measures on partitions.
    #[command(subcommand)]
    Measure(MeasureCmd),
}

#[derive(Subcommand, Debug)]
pub enum PolyCmd {
    /// Monomial expansion of f_{lambda/mu}(x1..xn).
    Expand(PolyExpandArgs),
    /// Value of f_{lambda/mu} at a point.
    Eval(PolyEvalArgs),
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    /// One of F, Ftilde, W, Q, j, J, MacdP, MacdQ.
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub lambda: String,
    #[arg(long, default_value = "")]
    pub mu: String,
    /// Value of q; formal when omitted.
    #[arg(long)]
    pub q: Option<String>,
    /// Value of t; defaults to q.
    #[arg(long)]
    pub t: Option<String>,
}

#[derive(Args, Debug)]
pub struct PolyExpandArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Number of variables.
    #[arg(long)]
    pub n: usize,
}

#[derive(Args, Debug)]
pub struct PolyEvalArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Comma-separated variable values.
    #[arg(long)]
    pub at: String,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgoArg {
    Dual,
    Direct,
    Both,
}

#[derive(Args, Debug)]
pub struct ProductArgs {
    #[arg(long)]
    pub mu: String,
    #[arg(long)]
    pub nu: String,
    #[arg(long, value_enum, default_value_t = AlgoArg::Both)]
    pub algo: AlgoArg,
}

#[derive(Args, Debug)]
pub struct PieriArgs {
    #[arg(long)]
    pub nu: String,
}

#[derive(Args, Debug)]
pub struct SkewArgs {
    #[arg(long)]
    pub lambda: String,
    #[arg(long, default_value = "")]
    pub mu: String,
    /// Use the n-variable elimination instead of the Ftilde expansion.
    #[arg(long)]
    pub direct: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// W_lambda in the F basis.
    #[value(name = "W2F")]
    W2F,
    /// F_lambda in the W basis.
    #[value(name = "F2W")]
    F2W,
}

#[derive(Args, Debug)]
pub struct BasisArgs {
    #[arg(long, value_enum)]
    pub direction: Direction,
    #[arg(long)]
    pub lambda: String,
    /// Truncation degree.
    #[arg(long)]
    pub degree: usize,
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(long, default_value = "")]
    pub mu: String,
    #[arg(long, default_value = "")]
    pub nu: String,
    /// Number of x variables.
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// Number of y variables.
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    /// Exact value of the parameter; formal when omitted.
    #[arg(long)]
    pub q: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Skew Cauchy identity for F and Ftilde, truncated in x-degree.
    #[command(name = "cauchy-F")]
    CauchyF {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 6)]
        deg: usize,
    },
    /// Cauchy identity for j and J, truncated in y-degree.
    #[command(name = "cauchy-HL")]
    CauchyHl {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 5)]
        deg: usize,
        /// Run the one-variable worked computation instead.
        #[arg(long)]
        single_variable: bool,
    },
    /// Dual Cauchy identity for j and F.
    #[command(name = "dual-cauchy")]
    DualCauchy {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 5)]
        deg: usize,
        /// Also run F in an independent parameter and report both readings.
        #[arg(long)]
        readings: bool,
    },
    /// omega(F_{lambda/mu}) = J_{lambda'/mu'}.
    #[command(name = "omega-F")]
    OmegaF {
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long, default_value_t = 5)]
        deg: usize,
        /// Check only the lowest layer omega(W) = Q.
        #[arg(long)]
        lowest: bool,
    },
    /// Macdonald Cauchy identity in two variables each, with the t=q and t=0 collapses.
    Macd {
        #[arg(long, default_value_t = 3)]
        deg: usize,
    },
    /// Every worked example and regression case.
    Golden,
}

#[derive(Args, Debug)]
pub struct SpecArgs {
    #[arg(long, value_delimiter = ',')]
    pub alphas: Vec<String>,
    #[arg(long, value_delimiter = ',')]
    pub betas: Vec<String>,
    #[arg(long, default_value = "0")]
    pub gamma: String,
    #[arg(long)]
    pub q: String,
}

#[derive(Subcommand, Debug)]
pub enum SpecCmd {
    /// Value of F_{lambda/mu} under the specialization.
    Eval {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value = "")]
        mu: String,
        /// Sign-flipped F instead of F.
        #[arg(long)]
        bar: bool,
        /// Taylor terms for the Plancherel part.
        #[arg(long, default_value_t = 32)]
        cutoff: usize,
    },
    /// phi_n = phi(F_{1^n}) for n = 1..=N.
    Phi {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 8)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum MeasureCmd {
    /// Probabilities of all lambda ⊇ mu with |lambda| <= cap, as JSON.
    Table {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long, default_value_t = 20)]
        cap: usize,
        #[arg(long, default_value_t = 1e-15)]
        eps: f64,
    },
    /// Independent samples, one partition per line.
    Sample {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long, default_value_t = 1000)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-12)]
        eps: f64,
    },
}
