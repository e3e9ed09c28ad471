mod check;
mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use semisym::{Eisenstein, Error, Integer, Rational, RingDescriptor, Zmod, DEFAULT_GROUP_CAP, DEFAULT_INDEX_CAP};
use serde_json::Value;

#[derive(Parser, Debug)]
#[command(name = "semisym", version, about = "Exact computations in semi-symmetric algebras")]
struct Cli {
    #[command(flatten)]
    ctx: Context,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
pub struct Context {
    /// Coefficient ring: Q, Z, mod:m or eisenstein.
    #[arg(long, default_value = "Q", global = true)]
    pub ring: String,
    /// Rank of the free module E.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// tensor, symmetric, exterior or truncated:k.
    #[arg(long, global = true)]
    pub builtin: Option<String>,
    /// JSON stage file: [{"degree": d, "generators": [...], "character": [...]}, ...].
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Highest degree of the sequence (builtin sequences) or of the checks.
    #[arg(long, global = true)]
    pub max_degree: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Largest permutation group that may be enumerated.
    #[arg(long, env = "SEMISYM_MAX_GROUP", default_value_t = DEFAULT_GROUP_CAP, global = true)]
    pub max_group: usize,
    /// Largest index space n^d that may be scanned.
    #[arg(long, default_value_t = DEFAULT_INDEX_CAP, global = true)]
    pub max_indices: u128,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Left,
    Right,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Example {
    Z15,
    Eisenstein,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Canonical basis of [χ]^d(E), for one degree or every degree up to --max-degree.
    Basis {
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Products of all basis pairs of degrees (p, q).
    Table {
        #[arg(long)]
        degree: usize,
        /// Degree of the right factor; defaults to --degree.
        #[arg(long)]
        right_degree: Option<usize>,
    },
    /// d_χ of a square matrix, with Laplace expansions along --composition.
    Schur {
        /// JSON array of rows, or CSV.
        #[arg(long)]
        matrix: PathBuf,
        /// Block sizes such as "1,2".
        #[arg(long)]
        composition: Option<String>,
    },
    /// ⟨x, y⟩ for a χ-vector x and a χ-form y (JSON, or @path).
    Pair {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// c_k(x) for a χ-vector x (JSON, or @path).
    Comul {
        #[arg(long)]
        x: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// a⌋f (left) or a⌊f (right).
    Inner {
        #[arg(value_enum)]
        side: Side,
        #[arg(long)]
        a: String,
        #[arg(long)]
        f: String,
    },
    /// Sequence validation and the algebra, coalgebra and pairing identities.
    Check {
        /// Random instances per randomized case.
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
    /// Reports on the two modules that fail to be free.
    Counterexample {
        #[arg(value_enum)]
        which: Example,
    },
}

/// Why a run stopped; each kind has its own exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Validation(String),
    Hypothesis(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Validation(_) => 1,
            Failure::Hypothesis(_) => 2,
            Failure::Usage(_) => 64,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Validation(m) | Failure::Hypothesis(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::HypothesisViolation(_) => Failure::Hypothesis(e.to_string()),
            Error::InvalidSequence(_) | Error::InconsistentCharacter(_) | Error::NonUnitValue(_) => Failure::Validation(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// A finished run: the JSON value, and whether every check in it passed.
pub struct Outcome {
    pub value: Value,
    pub passed: bool,
}

impl Outcome {
    pub fn ok(value: Value) -> Self {
        Outcome { value, passed: true }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    if let Command::Counterexample { which } = cli.command {
        return commands::counterexample(which);
    }
    let ring: RingDescriptor = cli.ctx.ring.parse()?;
    match ring {
        RingDescriptor::Rational => commands::run::<Rational>(&cli.command, &cli.ctx, ring),
        RingDescriptor::Integer => commands::run::<Integer>(&cli.command, &cli.ctx, ring),
        RingDescriptor::Modular(_) => commands::run::<Zmod>(&cli.command, &cli.ctx, ring),
        RingDescriptor::Eisenstein => commands::run::<Eisenstein>(&cli.command, &cli.ctx, ring),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 64 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            match cli.ctx.format {
                Format::Json => println!("{}", serde_json::to_string(&out.value).expect("serializable")),
                Format::Text => print!("{}", render::text(&out.value)),
            }
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("semisym: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
