use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "mcg", version, about = "Exact checks for mapping class group computations")]
pub struct Cli {
    /// Emit JSON on stdout.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// SL(2, Z): orders, trace classes, roots, torsion classes.
    #[command(subcommand)]
    Sl2z(Sl2zCmd),
    /// Dehn twist words on the shipped surface models.
    #[command(subcommand)]
    Twist(TwistCmd),
    /// Polygon gluings and their homology action.
    #[command(subcommand)]
    Glue(GlueCmd),
    /// Dihedral symmetry groups and fixed points.
    #[command(subcommand)]
    Sym(SymCmd),
    /// Euler characteristic, covering and lifting computations.
    #[command(subcommand)]
    Orb(OrbCmd),
    /// Decomposition graphs of the genus-1 bordered surface.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Bi-ordered groups and root uniqueness.
    #[command(subcommand)]
    Order(OrderCmd),
    /// Verification recipes.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Debug, Args)]
pub struct MatrixArg {
    /// Matrix as JSON, e.g. [[2,1],[1,1]].
    #[arg(long, allow_hyphen_values = true)]
    pub matrix: String,
}

#[derive(Debug, Subcommand)]
pub enum Sl2zCmd {
    Order(MatrixArg),
    Classify(MatrixArg),
    Roots {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(short = 'm', long = "power")]
        m: u32,
    },
    TorsionClass(MatrixArg),
    /// Box search for roots with entries bounded by --bound.
    OracleRoots {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(short = 'm', long = "power")]
        m: u32,
        /// Defaults to the brute-force search budget.
        #[arg(long)]
        bound: Option<u64>,
    },
}

#[derive(Debug, Args)]
pub struct ModelWord {
    #[arg(long)]
    pub model: String,
    /// Twist word, e.g. "t_a1 t_b^-1" or [["a1",1],["b",-1]].
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
}

#[derive(Debug, Subcommand)]
pub enum TwistCmd {
    /// Checks a named relation.
    Verify { relation: String },
    /// Lists the named relations.
    Relations,
    /// Images of the free generators under a twist word.
    Compose(ModelWord),
    /// Homology matrix of a twist word.
    H1(ModelWord),
    /// Runs the twist certification clauses on a model.
    Certify {
        #[arg(long)]
        model: String,
    },
}

#[derive(Debug, Args)]
pub struct PatternArg {
    /// `f:<rho>` or `g:<rho>`.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    pub pattern: Option<String>,
    /// GluingPattern JSON file.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GlueCmd {
    Analyze(PatternArg),
    Induced(PatternArg),
    Charpoly(PatternArg),
    /// Compares characteristic polynomials; exit 1 if they differ.
    Compare {
        #[arg(long)]
        first: String,
        #[arg(long)]
        second: String,
    },
}

#[derive(Debug, Args)]
pub struct GroupArg {
    /// `D2n:<n>` or `D2nxC2:<n>`.
    #[arg(long)]
    pub group: String,
}

#[derive(Debug, Subcommand)]
pub enum SymCmd {
    /// All elements, or those of the given order.
    Elements {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        order: Option<u32>,
    },
    Order {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        element: String,
    },
    /// Whether two elements commute; without --other, the centralizer.
    Commute {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        element: String,
        #[arg(long)]
        other: Option<String>,
    },
    Conj {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        element: String,
        #[arg(long)]
        other: String,
    },
    /// Fixed points under `first:<rho>` or `second:<rho>`.
    Fixed {
        #[arg(long)]
        rule: String,
        #[arg(long)]
        element: String,
    },
    #[command(name = "verify-521")]
    Verify521 {
        #[arg(long)]
        rho: u32,
    },
    #[command(name = "verify-522")]
    Verify522 {
        #[arg(long)]
        rho: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum OrbCmd {
    Euler {
        #[arg(long)]
        genus: u64,
        #[arg(long, default_value_t = 0)]
        boundary: u64,
    },
    /// Prong formula for comma-separated prong counts.
    Prongs {
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        #[arg(long)]
        prongs: String,
    },
    /// Riemann-Hurwitz for a CoverDatum (inline JSON, file, or family).
    Rh {
        #[arg(long)]
        cover: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        /// `first:<rho>` or `second:<rho>`.
        #[arg(long)]
        family: Option<String>,
    },
    /// Pivot test for points `ind:r,...`; the candidate is an index.
    Pivot {
        #[arg(long)]
        points: Option<String>,
        #[arg(long, default_value_t = 0)]
        candidate: usize,
        #[arg(long)]
        family: Option<String>,
    },
    Orders {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        q: u64,
    },
    Maxfix {
        #[arg(short = 'm', long = "order")]
        m: u64,
    },
    /// Least k with rep∘phi^k equivalent to rep.
    Liftk {
        /// PermRep JSON.
        #[arg(long, conflicts_with_all = ["degree", "perm"])]
        rep: Option<String>,
        #[arg(long, requires = "perm")]
        degree: Option<usize>,
        /// One per generator in cycle notation, e.g. "(1 2 3)".
        #[arg(long)]
        perm: Vec<String>,
        /// Generator images as JSON letter lists, e.g. [[2],[1]].
        #[arg(long)]
        phi: String,
        #[arg(long)]
        cap: Option<u32>,
    },
    Primesplit {
        #[arg(short = 'n', long)]
        n: u64,
    },
}

#[derive(Debug, Args)]
pub struct GraphArg {
    /// Graph JSON file.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Inline graph JSON.
    #[arg(long)]
    pub graph: Option<String>,
    /// Built-in example: case1..case4.
    #[arg(long)]
    pub example: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum GraphCmd {
    Validate(GraphArg),
    Rank(GraphArg),
    Classify(GraphArg),
    Autos(GraphArg),
}

#[derive(Debug, Subcommand)]
pub enum OrderCmd {
    /// Sample comparisons and root checks.
    Demo,
    /// Compares f and g and checks f^m = g^m => f = g.
    Check {
        /// `zq:<q>` or `heisenberg`.
        #[arg(long)]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(short = 'm', long = "power", default_value_t = 2)]
        m: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCmd {
    /// Runs every recipe; exit 0 iff all pass.
    All {
        /// Include wall-clock timings (makes output run-dependent).
        #[arg(long)]
        timing: bool,
    },
    /// Runs one recipe by name.
    Recipe {
        name: String,
        #[arg(long)]
        timing: bool,
    },
    /// Lists recipe names.
    List,
}
