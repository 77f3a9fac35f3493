use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Exact rank bounds for matrices with off-diagonal entries in a small multiplicative group.
#[derive(Debug, Parser)]
#[command(name = "grouprank", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Out {
    /// Write the JSON report (or constructed artifact) here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact rank of a matrix file.
    Rank {
        #[arg(long)]
        input: PathBuf,
        /// Reduce a rational matrix modulo this prime first.
        #[arg(long = "mod")]
        modulus: Option<u64>,
        #[command(flatten)]
        out: Out,
    },
    /// Entrywise product of two matrices.
    Hadamard(PairArgs),
    /// Kronecker product of two matrices.
    Kron(PairArgs),
    /// Build a structured matrix or point set
    #[command(subcommand)]
    Construct(Construct),
    /// Structural checks on a matrix
    #[command(subcommand)]
    Check(CheckCmd),
    /// Multiplicative group queries over the rationals
    #[command(subcommand)]
    Group(GroupCmd),
    /// Evaluate a closed-form bound exactly
    #[command(subcommand)]
    Bound(BoundCmd),
    /// Replay a rank argument on a concrete matrix
    #[command(subcommand)]
    Replay(ReplayCmd),
    /// Divisible-distance certificates for integer point sets
    #[command(subcommand)]
    Certify(CertifyCmd),
    /// Audits on point sets
    #[command(subcommand)]
    Audit(AuditCmd),
    /// Seeded batches of random instances checked against the rank bounds.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long)]
    pub a: PathBuf,
    #[arg(long)]
    pub b: PathBuf,
    #[command(flatten)]
    pub out: Out,
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// Matrix (a_i + a_j) from comma-separated distinct rationals.
    Sumset {
        #[arg(long, allow_hyphen_values = true)]
        values: String,
        #[command(flatten)]
        out: Out,
    },
    /// Squared distance matrix of a points CSV file.
    Distances {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Gram matrix of the 2-flats of F_3^d, each with one extra common point.
    Planes {
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Concyclic points with integral pairwise distances, as CSV.
    Circle {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Matrix P(x_i - x_j) for a polynomial JSON file vanishing at 0.
    Polydiff {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        poly: PathBuf,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Debug, Subcommand)]
pub enum CheckCmd {
    /// Search for a violation a_jj a_ik = a_jk a_ij with i < j, k outside {i, j}.
    Rectangle {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Largest exponent bound accepted.
    #[arg(long, default_value_t = 12)]
    pub max_exponent: u32,
    /// Largest number of generators accepted.
    #[arg(long, default_value_t = 3)]
    pub max_generators: usize,
    /// Largest number of equation terms accepted.
    #[arg(long, default_value_t = 6)]
    pub max_terms: usize,
    /// Largest number of scanned exponent points.
    #[arg(long, default_value_t = 50_000_000)]
    pub max_points: u64,
}

#[derive(Debug, Subcommand)]
pub enum GroupCmd {
    /// Number of primes dividing some element.
    Rank {
        #[arg(long, allow_hyphen_values = true)]
        elements: String,
        #[command(flatten)]
        out: Out,
    },
    /// Decide x in G, with witness exponents.
    Member {
        /// Generators, e.g. "-1,2,3/5".
        #[arg(long, allow_hyphen_values = true)]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[command(flatten)]
        out: Out,
    },
    /// Non-degenerate solutions of a_1 z_1 + ... + a_m z_m = 1 in an exponent box, as JSON lines.
    Sunit {
        #[arg(long, allow_hyphen_values = true)]
        group: String,
        /// Coefficients a_1..a_m.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        /// Exponent bound E.
        #[arg(long)]
        bound: u32,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Debug, Subcommand)]
pub enum BoundCmd {
    /// (8m)^(4 m^4 (m + m r + 1)).
    #[command(name = "A", alias = "a")]
    A {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        r: u64,
    },
    /// l^(l t).
    Ramsey {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        colors: u64,
    },
    /// binom(k + d, k), or binom(k + d - 1, k) with --monomial.
    Noga {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        monomial: bool,
    },
    /// binom(rho + s, rho).
    Matrix {
        #[arg(long)]
        rho: u64,
        #[arg(long)]
        s: u64,
    },
    /// prod binom(k_i + d_i, d_i).
    T11 {
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<u64>,
        #[arg(long, value_delimiter = ',')]
        ranks: Vec<u64>,
    },
    /// binom(p + d, d + 1) + 1.
    Points2 {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u64,
    },
    /// binom(q + d + 1, d + 1).
    PrimePower {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d: u64,
    },
    /// binom(d + 2 + s, d + 2).
    Prefix {
        #[arg(long)]
        s: u64,
        #[arg(long)]
        d: u64,
    },
}

#[derive(Debug, Args)]
pub struct ReplayArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Generators of the group containing the off-diagonal entries.
    #[arg(long, allow_hyphen_values = true)]
    pub group: String,
    /// Largest dependency support searched for zero sub-sums.
    #[arg(long, default_value_t = 12)]
    pub max_support: usize,
    /// Largest matrix size accepted.
    #[arg(long, default_value_t = 512)]
    pub max_n: usize,
    #[command(flatten)]
    pub out: Out,
}

#[derive(Debug, Subcommand)]
pub enum ReplayCmd {
    /// Labels, a monochromatic principal submatrix, and row-wise annihilation.
    First(ReplayArgs),
    /// The matrices M_l and A_l, value sets S_(w,l), and polynomials Q_w.
    Second(ReplayArgs),
}

#[derive(Debug, Subcommand)]
pub enum CertifyCmd {
    /// A squared distance divisible by the prime p, or the x^(p-1) rank certificate.
    P {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        out: Out,
    },
    /// A squared distance divisible by q = p^k, or the binom(x - 1, q - 1) certificate.
    Q {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Debug, Subcommand)]
pub enum AuditCmd {
    /// Distinct distances from each point to its predecessors.
    PrefixDistances {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        s: u64,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// noga, matrix, hadamard, t11 or prefix.
    pub suite: String,
    #[arg(long)]
    pub seed: u64,
    /// Number of instances; defaults to the suite's standard batch size.
    #[arg(long)]
    pub trials: Option<usize>,
    #[command(flatten)]
    pub out: Out,
}
