use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "hessdeform", version, about = "Exact Hessenberg-divisor deformation, cohomology and moduli computations")]
pub struct Cli {
    /// Emit the JSON envelope instead of text tables.
    #[arg(long, global = true)]
    pub json: bool,

    /// Bound on monomials per symmetric power (overrides HESSDEFORM_CAP).
    #[arg(long, global = true, value_name = "INT")]
    pub cap: Option<u128>,

    #[command(subcommand)]
    pub command: Group,
}

#[derive(Subcommand, Debug)]
pub enum Group {
    /// Root-system data.
    #[command(subcommand)]
    Rootsys(RootsysCmd),
    /// Borel-Weil-Bott on the full flag variety.
    #[command(subcommand)]
    Bwb(BwbCmd),
    /// Regular-weight tables.
    #[command(subcommand)]
    Tables(TablesCmd),
    /// Deformations and vanishing for the Hessenberg divisors.
    #[command(subcommand)]
    Hess(HessCmd),
    /// Type-A moduli: equivalence, stabilizers, characterization.
    #[command(subcommand)]
    Typea(TypeaCmd),
    /// Euler characteristics of symmetric powers of nilradicals.
    #[command(subcommand)]
    Symcoh(SymcohCmd),
    /// Batch verification suites.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Args, Debug, Clone)]
pub struct TypeArgs {
    /// Cartan family, one of A..G.
    #[arg(long = "type", value_name = "FAMILY")]
    pub family: String,
    #[arg(long)]
    pub rank: usize,
}

#[derive(Subcommand, Debug)]
pub enum RootsysCmd {
    Info(TypeArgs),
}

#[derive(Args, Debug, Clone)]
pub struct WeightArgs {
    #[command(flatten)]
    pub t: TypeArgs,
    /// Fundamental-weight coordinates, comma separated.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "type_a_eweight", conflicts_with = "type_a_eweight")]
    pub weight: Option<String>,
    /// Type A only: an integer n-tuple modulo (1,..,1), comma separated.
    #[arg(long = "type-a-eweight", allow_hyphen_values = true)]
    pub type_a_eweight: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum BwbCmd {
    /// Cohomology of one line bundle.
    Line(WeightArgs),
    /// Weyl dimension of a dominant weight.
    Dim(WeightArgs),
}

#[derive(Subcommand, Debug)]
pub enum TablesCmd {
    /// Roots with alpha + rho, and alpha - theta + rho, regular.
    Regular(TypeArgs),
}

#[derive(Subcommand, Debug)]
pub enum HessCmd {
    DeformX(TypeArgs),
    DeformY(TypeArgs),
    Vanishing {
        #[command(flatten)]
        t: TypeArgs,
        /// The partial flag variety instead of the full one.
        #[arg(long)]
        parabolic: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlavorArg {
    X,
    Y,
}

#[derive(Args, Debug, Clone)]
pub struct PairArgs {
    /// Comma-separated rationals; `inf` allowed for isoy.
    #[arg(long, allow_hyphen_values = true)]
    pub eigs: String,
    #[arg(long, allow_hyphen_values = true)]
    pub eigs2: String,
}

#[derive(Args, Debug, Clone)]
pub struct ConfigArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub eigs: String,
    #[arg(long, value_enum)]
    pub flavor: FlavorArg,
}

#[derive(Subcommand, Debug)]
pub enum TypeaCmd {
    /// Affine equivalence of two configurations.
    Isox(PairArgs),
    /// Möbius equivalence of two configurations.
    Isoy(PairArgs),
    /// Automorphism-group data.
    Aut(ConfigArgs),
    /// Canonical representative of the moduli point.
    Canon(ConfigArgs),
    /// Weights whose powers have the Euler characteristics of `e1`.
    Charsearch {
        #[arg(long)]
        n: usize,
        #[arg(long = "box", value_name = "BOUND")]
        bound: i64,
        #[arg(long)]
        kmax: i64,
    },
    /// Symmetric form making a rational diagonalizable matrix self-adjoint.
    Symmetrize {
        /// Row-major JSON array of rationals.
        #[arg(long)]
        matrix: String,
    },
    /// Coefficients of det(uA + vB).
    Pencil {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
}

#[derive(Args, Debug, Clone)]
pub struct SymArgs {
    #[command(flatten)]
    pub t: TypeArgs,
    /// Symmetric power.
    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,
    /// Positive root in simple-root coordinates; all admissible roots when absent.
    #[arg(long)]
    pub beta: Option<String>,
    /// Short simple root (1-based); all short simple roots when absent.
    #[arg(long)]
    pub alpha: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleArg {
    Vanish,
    Shift,
    Reflect,
    All,
}

#[derive(Subcommand, Debug)]
pub enum SymcohCmd {
    /// Identity for short positive roots.
    Short(SymArgs),
    /// Identity for long positive roots.
    Long(SymArgs),
    /// Type-A parabolic identity.
    Para(SymArgs),
    /// Report-only comparison of the theta-twists.
    Conjecture {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long)]
        n: i64,
        /// Defaults to 2 in type C and 4 otherwise.
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<i64>,
    },
    /// Random instances of the Demazure-type rules.
    Demazure {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long, value_enum, default_value = "all")]
        rule: RuleArg,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Every acceptance criterion.
    All {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
        /// Also write the JSON envelope to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = crate::verify::DEFAULT_SEED)]
        seed: u64,
    },
}
