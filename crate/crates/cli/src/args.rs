use clap::{Args, Parser, Subcommand, ValueEnum};
use parh_core::linalg::Field;

#[derive(Parser, Debug)]
#[command(
    name = "parh",
    version,
    about = "Partial group algebras, their groupoid decompositions and partial group (co)homology",
    arg_required_else_help = true
)]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Print the JSON schemas of every report and exit.
    #[arg(long)]
    pub help_schema: bool,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Finite groups.
    #[command(subcommand)]
    Groups(GroupsCmd),
    /// The partial group algebra.
    #[command(subcommand)]
    Kpar(KparCmd),
    /// The groupoid of a finite group.
    #[command(subcommand)]
    Groupoid(GroupoidCmd),
    /// Partial and ordinary (co)homology.
    #[command(subcommand)]
    Homology(HomologyCmd),
    /// Verification suites.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Computations in the partial group algebra of the integers.
    #[command(subcommand)]
    Z(ZCmd),
}

#[derive(Args, Debug, Clone)]
pub struct GroupArg {
    /// Group name (C1..C64, C2xC2, S3, D4, Q8) or Cayley table file.
    #[arg(long, default_value = "C2")]
    pub group: String,
}

#[derive(Args, Debug, Clone)]
pub struct FieldArg {
    /// Coefficient field: Q, F<p> or Fp:<p>.
    #[arg(long, default_value = "Q", value_parser = parse_field)]
    pub field: Field,
}

#[derive(Args, Debug, Clone)]
pub struct CapArg {
    /// Largest group order for groupoid builds.
    #[arg(long, default_value_t = parh_core::groupoid::DEFAULT_MAX_ORDER)]
    pub max_order: usize,
    /// Largest number of chain columns in one degree.
    #[arg(long, default_value_t = parh_core::homology::DEFAULT_COLUMN_CAP)]
    pub cap: usize,
    /// Lift both size caps.
    #[arg(long)]
    pub no_cap: bool,
}

impl CapArg {
    pub fn max_order(&self) -> usize {
        if self.no_cap { 64 } else { self.max_order }
    }

    pub fn columns(&self) -> usize {
        if self.no_cap { usize::MAX } else { self.cap }
    }
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse::<Field>().map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
pub enum GroupsCmd {
    /// Built-in groups.
    List,
    /// Elements and Cayley table.
    Show(GroupArg),
}

#[derive(Subcommand, Debug)]
pub enum KparCmd {
    /// Dimension, against the closed formula and the groupoid count.
    Dim {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        caps: CapArg,
    },
    /// The canonical basis.
    Basis(GroupArg),
}

#[derive(Subcommand, Debug)]
pub enum GroupoidCmd {
    /// Connected components with their vertices and isotropy groups.
    Components {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        caps: CapArg,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartialModule {
    /// The idempotent subalgebra B.
    #[value(name = "B")]
    B,
    /// The partial group algebra itself.
    #[value(name = "regular")]
    Regular,
    /// Elementary module of a component with trivial isotropy action.
    #[value(name = "W⊗trivial", alias = "W-trivial", alias = "Wxtrivial")]
    WTrivial,
    /// Elementary module of a component with regular isotropy action.
    #[value(name = "W⊗regular", alias = "W-regular", alias = "Wxregular")]
    WRegular,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupModule {
    Trivial,
    Regular,
}

#[derive(Args, Debug)]
pub struct PartialArgs {
    #[command(flatten)]
    pub group: GroupArg,
    #[command(flatten)]
    pub field: FieldArg,
    /// Highest degree.
    #[arg(long, default_value_t = 2)]
    pub max: usize,
    #[arg(long, value_enum, default_value = "B")]
    pub module: PartialModule,
    /// Component index, for the W⊗ modules.
    #[arg(long)]
    pub component: Option<usize>,
    #[command(flatten)]
    pub caps: CapArg,
}

#[derive(Subcommand, Debug)]
pub enum HomologyCmd {
    /// Partial homology.
    Partial(PartialArgs),
    /// Partial cohomology.
    Cohomology(PartialArgs),
    /// Ordinary (co)homology of the group or of an isotropy group.
    Ordinary {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 2)]
        max: usize,
        #[arg(long, value_enum, default_value = "trivial")]
        module: GroupModule,
        /// Use the isotropy group of this component instead of the whole group.
        #[arg(long)]
        component: Option<usize>,
        /// Compute cohomology instead of homology.
        #[arg(long)]
        cohomology: bool,
        #[command(flatten)]
        caps: CapArg,
    },
}

#[derive(Args, Debug)]
pub struct SuiteArgs {
    #[command(flatten)]
    pub group: GroupArg,
    #[command(flatten)]
    pub field: FieldArg,
    #[command(flatten)]
    pub caps: CapArg,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Induced coefficients against ordinary isotropy (co)homology.
    TheoremA {
        #[command(flatten)]
        suite: SuiteArgs,
        #[arg(long, default_value_t = 2)]
        max: usize,
        /// Component index; all components when omitted.
        #[arg(long)]
        component: Option<usize>,
        #[arg(long, value_enum, default_value = "trivial")]
        module: GroupModule,
    },
    /// Coefficients in B against the sum over components.
    CorollaryB {
        #[command(flatten)]
        suite: SuiteArgs,
        #[arg(long, default_value_t = 2)]
        max: usize,
    },
    /// The tensor product of B with each component algebra.
    Section5(SuiteArgs),
    /// The sections of the component projections.
    Section6(SuiteArgs),
    /// Vanishing of cohomology with coefficients in the algebra itself.
    KparCoeffVanishing {
        #[command(flatten)]
        suite: SuiteArgs,
        #[arg(long, default_value_t = 2)]
        max: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum ZCmd {
    /// Relations among the generators f_i.
    Relations {
        #[arg(long, default_value_t = 5)]
        bound: i64,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Compare the annihilator of f_{k+1} modulo V_k with its predicted form.
    Quotient {
        #[arg(long, default_value_t = 1)]
        k: i64,
        /// Window size N; defaults to 2k + 4.
        #[arg(long)]
        bound: Option<i64>,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Random skew-symmetric cancellation instances.
    Cancellation {
        /// Z or a finite group.
        #[arg(long, default_value = "Z")]
        group: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Decompose augmentation-ideal elements along the generators f_g.
    IgDecompose {
        /// Element in text form, e.g. "e{1}[2] - e{1}e{2}"; random window elements when omitted.
        #[arg(long, allow_hyphen_values = true)]
        element: Option<String>,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        bound: i64,
        #[command(flatten)]
        field: FieldArg,
    },
}
