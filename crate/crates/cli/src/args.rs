use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "fences",
    version,
    about = "Branching multiplicities through interleaving patterns"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// JSON-lines fact store read by transport verbs and written by `weyl fact`.
    #[arg(long, global = true)]
    pub facts: Option<PathBuf>,
    /// Treat the U(2,1) table as complete, turning unlisted cases into Zero.
    #[arg(long, global = true)]
    pub assume_he_complete: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Interleaving patterns: listing, classification and fences.
    #[command(subcommand)]
    Patterns(PatternsCmd),
    /// A unit-step walk between two points of one pattern.
    Walk(WalkArgs),
    /// U(n) > U(n-1) branching.
    #[command(subcommand)]
    Weyl(WeylCmd),
    /// The U(2,1) > U(1,1) discrete series table.
    #[command(subcommand)]
    U21(U21Cmd),
    /// GL(n,R) > GL(n-1,R) families.
    #[command(subcommand)]
    Gl(GlCmd),
    /// Speh representations.
    #[command(subcommand)]
    Speh(SpehCmd),
    /// Discrete series of U(p,q).
    #[command(subcommand)]
    Ds(DsCmd),
    /// U(p,q) symmetric spaces.
    #[command(subcommand)]
    Upq(UpqCmd),
    /// Fact store maintenance.
    #[command(subcommand)]
    Facts(FactsCmd),
    /// Carry a stored verdict to a new point of the same pattern.
    Transport(TransportArgs),
}

#[derive(Subcommand, Debug)]
pub enum PatternsCmd {
    /// All strict patterns on (n, m).
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Print only the number of patterns.
        #[arg(long)]
        count: bool,
    },
    /// The pattern realized by a point.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        y: String,
    },
    /// The fences of a strict pattern.
    Fences {
        #[arg(long)]
        pattern: String,
    },
    /// Parses a pattern and reports its shape.
    Parse {
        #[arg(long)]
        pattern: String,
    },
}

#[derive(Args, Debug)]
pub struct WalkArgs {
    #[arg(long)]
    pub pattern: String,
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    pub nu: String,
    #[arg(long, allow_hyphen_values = true)]
    pub xi: String,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    /// Route the walk through the extremal point.
    #[arg(long)]
    pub via_extremal: bool,
}

#[derive(Subcommand, Debug)]
pub enum WeylCmd {
    /// The multiplicity of pi_y in pi_x restricted.
    Mult {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        y: String,
    },
    /// The full restriction computed from the Schur polynomial.
    Oracle {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Dimension of pi_x.
    Dim {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// A branching fact, added to the store when --facts is given.
    Fact {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        y: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum U21Cmd {
    /// Verdict for Pi_(x1,x2,y) against pi_(xi,eta).
    Query {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
    },
    /// Verdict for a limit configuration with one equality.
    Limit {
        #[arg(long)]
        pattern: String,
    },
    /// All 60 strict configurations.
    Audit,
}

#[derive(Subcommand, Debug)]
pub enum GlCmd {
    /// Multiplicity of pi_l(nu) in Pi_l(lambda).
    Mult {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value = "")]
        lambda: String,
        #[arg(long, default_value = "")]
        nu: String,
    },
    /// The minimal K-type of Pi_l(lambda).
    Ktype {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value = "")]
        lambda: String,
    },
    /// Transport across fences from the store.
    Jump {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "")]
        lambda: String,
        #[arg(long, default_value = "")]
        nu: String,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum EpsArg {
    Half,
    Integral,
}

#[derive(Subcommand, Debug)]
pub enum SpehCmd {
    /// Builds the adjacent seed for lambda and checks every hypothesis.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = EpsArg::Half)]
        eps_convention: EpsArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum DsCmd {
    /// Splits a Harish-Chandra parameter into (lambda+, w).
    Split {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// The holomorphic seed below nu.
    Holo {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
    /// Pattern-constancy transport from the store.
    Ggp {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        w: String,
        #[arg(long)]
        w2: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda_plus: String,
        #[arg(long, allow_hyphen_values = true)]
        nu_plus: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum UpqCmd {
    /// Discrete series of the symmetric space up to a bound.
    Ds {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        bound: String,
    },
    /// Multiplicity for U(p,q) > U(p-1,q).
    Mult {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        /// Pattern of lambda, e.g. "x>y" or "y1 > x1 > y2".
        #[arg(long = "case")]
        case: String,
        /// Pattern of nu when it differs from --case.
        #[arg(long = "case2")]
        case2: Option<String>,
        #[arg(long, default_value = "")]
        lambda: String,
        #[arg(long, default_value = "")]
        nu: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum FactsCmd {
    /// Union of two stores.
    Merge {
        a: PathBuf,
        b: PathBuf,
        /// Write the merged store here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Prints a store.
    Show { path: Option<PathBuf> },
}

#[derive(Args, Debug)]
pub struct TransportArgs {
    /// Group pair of the seed, e.g. "U(3)>U(2)".
    #[arg(long)]
    pub pair: Option<String>,
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    pub nu: String,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
}
