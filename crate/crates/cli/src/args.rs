use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "pyrene",
    version,
    about = "Kekulé structures, forcing and anti-forcing polynomials of pyrene chains"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a system and report its graph statistics.
    Generate {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List every perfect matching as sorted edge indices.
    Matchings {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Forcing or anti-forcing polynomial.
    Polynomial(PolyArgs),
    /// Forcing or anti-forcing spectrum.
    Spectrum(PolyArgs),
    /// Kekulé counts, degree of freedom or anti-forcing sums of H_n.
    Sequence {
        #[arg(long, value_enum)]
        name: SequenceArg,
        /// One route only; all applicable routes by default.
        #[arg(long)]
        route: Option<String>,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the cross-check matrix.
    Validate {
        /// Validation settings, as a file path or inline JSON.
        #[arg(long)]
        config: Option<String>,
        #[arg(long)]
        max_n: Option<usize>,
        /// Replacement for the seed F(H_1, x), ascending coefficients, e.g. `0,2,5`.
        #[arg(long)]
        forcing_seed: Option<String>,
        #[arg(long)]
        caps: Option<Caps>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct SystemArgs {
    /// System document, as a file path or inline JSON.
    #[arg(long, conflicts_with = "family")]
    pub system: Option<String>,
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    /// Chain length for `pyrene_chain` and `auxiliary`.
    #[arg(long = "n")]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    #[arg(long, value_enum, default_value_t = Kind::Forcing)]
    pub kind: Kind,
    #[arg(long, value_enum, default_value_t = Method::Brute)]
    pub method: Method,
    /// Brute-force limits as `MAX_PMS,MAX_WIDTH`.
    #[arg(long)]
    pub caps: Option<Caps>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "pyrene_chain")]
    PyreneChain,
    Auxiliary,
    Pyrene,
    Phenanthrene,
    Diphenyl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Forcing,
    Antiforcing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Oracle,
    Recurrence,
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SequenceArg {
    Phi,
    Idf,
    #[value(name = "af_sum")]
    AfSum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_matchings: u64,
    pub max_width: usize,
}

impl FromStr for Caps {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| format!("expected MAX_PMS,MAX_WIDTH, got `{s}`"))?;
        let max_matchings: u64 = a.trim().parse().map_err(|e| format!("MAX_PMS: {e}"))?;
        let max_width: usize = b.trim().parse().map_err(|e| format!("MAX_WIDTH: {e}"))?;
        if max_matchings == 0 || max_width == 0 {
            return Err("caps must be positive".to_owned());
        }
        Ok(Caps {
            max_matchings,
            max_width,
        })
    }
}

impl<'de> serde::Deserialize<'de> for Caps {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
