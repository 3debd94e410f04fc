use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use weylzeta::ring::parse_rational;

pub const DEFAULT_TRUNC: usize = 24;
pub const DEFAULT_SCALE: usize = 2;

#[derive(Debug, Parser)]
#[command(
    name = "weylzeta",
    version,
    about = "Exact Coxeter, Hecke and zeta-function identities for affine Weyl groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct SystemArgs {
    /// Coxeter type: A2t, C2t, G2t, E8, ... (a trailing `t` marks the affine group)
    #[arg(long = "type", value_name = "TYPE")]
    pub type_tag: String,

    /// Rank, when --type is a bare family letter (`--type A --rank 5`)
    #[arg(long)]
    pub rank: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Poincaré series of a finite or affine Weyl group, checked against enumeration
    Poincare {
        #[command(flatten)]
        system: SystemArgs,
        /// Series truncation and enumeration bound
        #[arg(long, default_value_t = DEFAULT_TRUNC)]
        trunc: usize,
    },
    /// Alternating product Alt(W)(u) over all parabolic subgroups
    Alt {
        #[command(flatten)]
        system: SystemArgs,
    },
    /// Census of the straight-strip factorization of a rank-two affine group
    Factorize {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, default_value_t = DEFAULT_TRUNC)]
        trunc: usize,
    },
    /// Determinant identity det H1 · det H2 = det Alt(W) for characters or an ingested representation
    Corollary1 {
        #[command(flatten)]
        system: SystemArgs,
        /// Enumeration bound and order of the truncated-series cross-check
        #[arg(long, default_value_t = DEFAULT_TRUNC)]
        trunc: usize,
        /// `formal` or a rational value such as `3` or `1/2`
        #[arg(long, default_value = "formal")]
        q: QMode,
        /// Representation as JSON: {dim, generators: {s1: [[..]], ..}, scalar, q}
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// Exponent table of the affine alternating products, from Macdonald's formula
    MacdonaldTable {
        /// One type (E8, or a family letter with --rank); all types up to rank 8 when omitted
        #[arg(long = "type", value_name = "TYPE")]
        type_tag: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Ihara zeta function of a graph and, for (q+1)-regular graphs, the determinant formula
    Ihara {
        /// Edge list, one `u v` pair per line, 0-indexed
        #[arg(long)]
        graph: PathBuf,
        /// Check the formula for (q+1)-regular graphs; inferred from the degree when omitted
        #[arg(long)]
        q: Option<i64>,
        #[arg(long, default_value_t = DEFAULT_TRUNC)]
        trunc: usize,
    },
    /// Apartment torus quotient at q = 1: strip zeta functions and their traces
    Torus {
        #[command(flatten)]
        system: SystemArgs,
        /// The quotient is by k times the coroot lattice
        #[arg(long, default_value_t = DEFAULT_SCALE)]
        scale: usize,
        /// Zeta truncation; the truncated-series cross-check stops at order 6
        #[arg(long, default_value_t = DEFAULT_TRUNC)]
        trunc: usize,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub enum QMode {
    Formal,
    Value(BigRational),
}

impl std::str::FromStr for QMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s.trim() == "formal" {
            return Ok(QMode::Formal);
        }
        parse_rational(s).map(QMode::Value).ok_or_else(|| format!("expected `formal` or a rational, got {s:?}"))
    }
}
