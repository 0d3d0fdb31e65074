use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "rlseries", version, about = "Semi-Laurent series and generalized Riordan arrays over the rationals")]
pub struct Cli {
    /// Default precision for input series that omit "prec"
    #[arg(long, global = true, env = "RIORDAN_DEFAULT_PREC", value_parser = clap::value_parser!(i64).range(1..))]
    pub prec: Option<i64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Series arithmetic and composition
    #[command(subcommand)]
    Series(SeriesCmd),
    /// Generalized Riordan arrays
    #[command(subcommand)]
    Riordan(RiordanCmd),
    /// Tangent vectors and brackets
    #[command(subcommand)]
    Lie(LieCmd),
    /// Run randomized property suites (all of them when none is named); the
    /// global --prec sets the length of the random inputs, default 16
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
pub enum SeriesCmd {
    Add {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    Mul {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Multiplicative inverse
    Inv {
        #[arg(long)]
        a: String,
    },
    Pow {
        #[arg(long)]
        a: String,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// g∘f
    Compose {
        #[arg(long)]
        g: String,
        #[arg(long)]
        f: String,
        /// Treat g as a Laurent polynomial (needed for a unit inner series)
        #[arg(long)]
        finite_support: bool,
    },
    /// Compositional inverse of a series of order 1
    CompInverse {
        #[arg(long)]
        f: String,
    },
    IterSqrt {
        #[arg(long)]
        f: String,
    },
    IterRoot {
        #[arg(long)]
        f: String,
        #[arg(long)]
        n: u32,
    },
    /// m-th multiplicative root of a series of order 0
    MultRoot {
        #[arg(long)]
        a: String,
        #[arg(long)]
        m: u32,
        /// Root of the constant term to start from
        #[arg(long, allow_hyphen_values = true)]
        root0: Option<String>,
    },
    Derive {
        #[arg(long)]
        a: String,
    },
}

/// An array given either as `--array '{"g":…,"f":…}'` or as `--g` and `--f`.
#[derive(Args, Debug)]
pub struct ArrayArg {
    #[arg(long, conflicts_with_all = ["g", "f"])]
    pub array: Option<String>,
    #[arg(long, requires = "f")]
    pub g: Option<String>,
    #[arg(long, requires = "g")]
    pub f: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum RiordanCmd {
    /// Validate a pair and report its subgroup memberships
    Build(ArrayArg),
    Entry {
        #[command(flatten)]
        array: ArrayArg,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    Window {
        #[command(flatten)]
        array: ArrayArg,
        /// Row range lo:hi (inclusive)
        #[arg(long, allow_hyphen_values = true)]
        rows: String,
        /// Column range lo:hi (inclusive)
        #[arg(long, allow_hyphen_values = true)]
        cols: String,
    },
    Mul {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    Inv(ArrayArg),
    Pow {
        #[command(flatten)]
        array: ArrayArg,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    /// n-th root in the subgroup with ord g = 0 and f_1 = 1
    Root {
        #[command(flatten)]
        array: ArrayArg,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        root0: Option<String>,
    },
    /// A-sequence
    Aseq(ArrayArg),
    /// Z-sequence anchored at column p
    Zseq {
        #[command(flatten)]
        array: ArrayArg,
        #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
        p: i64,
    },
    /// Rebuild a window from an A-sequence and one column
    Reconstruct {
        /// A-sequence as a series
        #[arg(long)]
        a: String,
        /// Column entries from the diagonal downward, as a JSON list of strings
        #[arg(long)]
        seed: String,
        /// Diagonal offset (ord g)
        #[arg(long, allow_negative_numbers = true)]
        q: i64,
        /// Index of the seed column
        #[arg(long, allow_negative_numbers = true)]
        col: i64,
        #[arg(long, allow_hyphen_values = true)]
        rows: String,
        #[arg(long, allow_hyphen_values = true)]
        cols: String,
    },
    /// Semidirect coordinates ((t^g, -ord g), f)
    Chi(ArrayArg),
    /// Action of f on (g, n): ((g∘f)(z/f)^n, n)
    Psi {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
        n: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum LieCmd {
    Bracket {
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Directional derivative (g'∘h)·chi of g∘h along chi
    Dcompose {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[arg(long)]
        chi: String,
        #[arg(long)]
        finite_support: bool,
    },
    TangentMul {
        #[arg(long)]
        base1: String,
        #[arg(long)]
        v1: String,
        #[arg(long)]
        base2: String,
        #[arg(long)]
        v2: String,
    },
    LeftTranslate {
        #[arg(long)]
        base: String,
        #[arg(long)]
        v: String,
    },
    ClassicalBracket {
        #[arg(long)]
        l1: String,
        #[arg(long)]
        l2: String,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub suites: Vec<String>,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub cases: usize,
}
