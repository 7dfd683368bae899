use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use primfact_core::{Partition, Permutation};

#[derive(Parser, Debug)]
#[command(
    name = "primfact",
    version,
    about = "Exact counts of primitive factorizations into transpositions"
)]
pub struct Cli {
    /// Emit one JSON document per query.
    #[arg(long, global = true)]
    pub json: bool,

    /// Node budget for enumerations and group-algebra dynamic programs.
    #[arg(long, global = true, default_value_t = primfact_core::Budget::DEFAULT_MAX_NODES)]
    pub max_nodes: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Primitive factorizations of a permutation, by length or by type.
    Count(CountArgs),
    /// Minimal primitive factorizations of a cycle type, in total or by type.
    Minimal(MinimalArgs),
    /// Primitive factorizations of an n-cycle at a given genus.
    FullCycle(FullCycleArgs),
    /// Transitive factorizations of a cycle type (minimal, or of an n-cycle at a genus).
    Hurwitz(HurwitzArgs),
    /// Coefficients of the generating function of a class, or its closed form.
    Phi(PhiArgs),
    /// Haar-unitary permutation correlator at dimension N.
    Correlator(CorrelatorArgs),
    /// Cross-check the independent methods against each other.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("what").required(true).args(["length", "lambda"])))]
pub struct CountArgs {
    /// Permutation in cycle notation "(1 2)(3 4)" or one-line notation "2,1,4,3".
    #[arg(long)]
    pub perm: Permutation,
    /// Number of transpositions.
    #[arg(long)]
    pub length: Option<usize>,
    /// Factorization type, e.g. "2,1".
    #[arg(long = "type", value_name = "PARTITION")]
    pub lambda: Option<Partition>,
    #[arg(long, value_enum, default_value_t = CountMethod::Auto)]
    pub method: CountMethod,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    Auto,
    Brute,
    Jm,
    Character,
}

#[derive(Args, Debug)]
pub struct MinimalArgs {
    #[arg(long)]
    pub cycle_type: Partition,
    #[arg(long = "type", value_name = "PARTITION")]
    pub lambda: Option<Partition>,
}

#[derive(Args, Debug)]
pub struct FullCycleArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub genus: usize,
    #[arg(long, value_enum, default_value_t = FullCycleMethod::Cf)]
    pub method: FullCycleMethod,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FullCycleMethod {
    /// Catalan times central factorial.
    Cf,
    Sinh,
    Brute,
}

#[derive(Args, Debug)]
pub struct HurwitzArgs {
    #[arg(long)]
    pub cycle_type: Partition,
    #[arg(long, default_value_t = 0)]
    pub genus: usize,
}

#[derive(Args, Debug)]
pub struct PhiArgs {
    #[arg(long)]
    pub cycle_type: Partition,
    /// Highest coefficient to print.
    #[arg(long, default_value_t = 10)]
    pub order: usize,
    /// Print the reduced rational function instead of coefficients.
    #[arg(long)]
    pub closed_form: bool,
}

#[derive(Args, Debug)]
pub struct CorrelatorArgs {
    #[arg(long)]
    pub perm: Permutation,
    /// Matrix dimension N, at least the degree of the permutation.
    #[arg(long)]
    pub dim: u64,
    #[arg(long, value_enum, default_value_t = WeingartenChoice::Character)]
    pub method: WeingartenChoice,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeingartenChoice {
    Gram,
    Character,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long, default_value_t = 4)]
    pub max_n: usize,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    All,
    Minimal,
    Jm,
    Character,
    Matrix,
}
