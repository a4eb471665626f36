//! The `pecomb` command line: thin JSON wrappers over the library.

pub mod cache;
pub mod error;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use pecomb::cells::{stratum_report, summand_labels};
use pecomb::fock::{apply_word, tensor_row};
use pecomb::tl::{faithfulness_witness, normalize};
use pecomb::verify::{self, Params, Suite};
use pecomb::weight::{d_inverse, f_map, marking, prop_link_weight};
use pecomb::{FockVector, Partition, Rep, TlElement};

pub use cache::Cache;
pub use error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "pecomb",
    version,
    about = "Exact combinatorics of the periplectic Deligne category"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Emit JSON (the only output format).
    #[arg(long, global = true, default_value_t = true)]
    pub json: bool,

    /// Largest partition size swept by `verify`.
    #[arg(long, global = true, default_value_t = 10)]
    pub max_size: usize,

    /// Generators range over [-window, window] in the TL sweeps of `verify`.
    #[arg(long, global = true, default_value_t = 4, allow_hyphen_values = true)]
    pub window: i64,

    /// Seed for the randomized parts of `verify`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Memo file for tensor rows.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RepArg {
    Xi,
    XiPrime,
}

impl From<RepArg> for Rep {
    fn from(r: RepArg) -> Rep {
        match r {
            RepArg::Xi => Rep::Xi,
            RepArg::XiPrime => Rep::XiPrime,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply T_{i_1}⋯T_{i_r} to a vector. The rightmost generator acts first.
    Act {
        #[arg(long, value_enum)]
        rep: RepArg,
        /// Comma-separated generator indices, e.g. `0,-1,0`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_word)]
        word: Word,
        /// Start from a single partition, e.g. `3,1`; empty string for ∅.
        #[arg(long, value_parser = parse_partition, conflicts_with = "vector")]
        partition: Option<Partition>,
        /// Start from a FockVector in JSON.
        #[arg(long, value_parser = parse_vector)]
        vector: Option<FockVector>,
    },
    /// The nonzero blocks (q, κ) of R(λ) ⊗ R(□).
    Tensor {
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
    },
    /// Cell, block and staircase ideal memberships of λ.
    Cell {
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
    },
    /// The dominant weight f(λ), or the partition with a given d-set.
    Weight {
        #[arg(long, value_parser = parse_partition, required_unless_present = "d_set")]
        partition: Option<Partition>,
        /// Also print the marking and the closed-formula weight.
        #[arg(long, requires = "partition")]
        detail: bool,
        /// Invert d: comma-separated integers.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_word, conflicts_with = "partition")]
        d_set: Option<Word>,
    },
    /// Summand labels of V^{⊗r} for pe(n).
    Summands {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Normal form of a generator word; `null` if it is zero.
    Normalize {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_word)]
        word: Word,
    },
    /// A partition on which Ξ′(x) is nonzero.
    Witness {
        /// A TL element in JSON: `[{"word":[[a,b],...],"coeff":c},...]`.
        #[arg(long, value_parser = parse_element, required_unless_present = "word")]
        element: Option<TlElement>,
        /// Shorthand for the monomial of a generator word.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_word, conflicts_with = "element")]
        word: Option<Word>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_parser = parse_suite, default_value = "all")]
        suite: Suite,
    },
}

/// A generator word as parsed from the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word(pub Vec<i64>);

pub fn parse_word(s: &str) -> Result<Word, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Word(Vec::new()));
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(Word)
}

pub fn parse_partition(s: &str) -> Result<Partition, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn parse_vector(s: &str) -> Result<FockVector, String> {
    serde_json::from_str(s).map_err(|e| e.to_string())
}

fn parse_element(s: &str) -> Result<TlElement, String> {
    serde_json::from_str(s).map_err(|e| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: pecomb::Error| e.to_string())
}

/// What a command produced: a JSON document for stdout, a note for stderr and
/// whether it counts as a verification failure.
#[derive(Debug)]
pub struct Outcome {
    pub output: Value,
    pub note: Option<String>,
    pub failed: bool,
}

impl Outcome {
    fn ok(v: impl Serialize) -> Result<Self, CliError> {
        let output = serde_json::to_value(v).map_err(|e| CliError::Parse(e.to_string()))?;
        Ok(Outcome {
            output,
            note: None,
            failed: false,
        })
    }
}

#[derive(Debug, PartialEq, Serialize, serde::Deserialize)]
struct TensorEntry {
    q: i64,
    partition: Partition,
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Act {
            rep,
            word,
            partition,
            vector,
        } => {
            let start = match (partition, vector) {
                (Some(p), _) => FockVector::basis(p.clone()),
                (None, Some(v)) => v.clone(),
                (None, None) => {
                    return Err(CliError::Parse("act needs --partition or --vector".into()))
                }
            };
            Outcome::ok(apply_word(&start, &word.0, (*rep).into()))
        }
        Command::Tensor { partition } => {
            let compute = || -> Vec<TensorEntry> {
                tensor_row(partition)
                    .into_iter()
                    .map(|(q, partition)| TensorEntry { q, partition })
                    .collect()
            };
            let rows = match &g.cache {
                Some(path) => {
                    let mut cache = Cache::open(path)?;
                    let key = format!("tensor:{}", canonical(partition));
                    let rows = cache.get_or_compute(&key, compute)?;
                    cache.save()?;
                    rows
                }
                None => compute(),
            };
            Outcome::ok(rows)
        }
        Command::Cell { partition } => Outcome::ok(stratum_report(partition)),
        Command::Weight {
            partition,
            detail,
            d_set,
        } => match (partition, d_set) {
            (_, Some(d)) => {
                let lambda = d_inverse(&d.0, d.0.len())?;
                Outcome::ok(json!({ "partition": lambda, "weight": f_map(&lambda) }))
            }
            (Some(lambda), None) if *detail => Outcome::ok(json!({
                "partition": lambda,
                "marking": marking(lambda),
                "weight": f_map(lambda),
                "closedFormula": prop_link_weight(lambda)?,
            })),
            (Some(lambda), None) => Outcome::ok(f_map(lambda)),
            (None, None) => Err(CliError::Parse(
                "weight needs --partition or --d-set".into(),
            )),
        },
        Command::Summands { n, r } => Outcome::ok(summand_labels(*n, *r)),
        Command::Normalize { word } => Outcome::ok(normalize(&word.0)?),
        Command::Witness { element, word } => {
            let x = match (element, word) {
                (Some(x), _) => x.clone(),
                (None, Some(w)) => match normalize(&w.0)? {
                    Some(nf) => TlElement::monomial(nf),
                    None => TlElement::zero(),
                },
                (None, None) => {
                    return Err(CliError::Parse("witness needs --element or --word".into()))
                }
            };
            match faithfulness_witness(&x)? {
                Some((lambda, image)) => {
                    Outcome::ok(json!({ "partition": lambda, "image": image }))
                }
                None => Err(CliError::Domain(pecomb::Error::Precondition(
                    "the zero element has no witness".into(),
                ))),
            }
        }
        Command::Verify { suite } => {
            let params = Params {
                max_size: g.max_size,
                window: g.window,
                seed: g.seed,
            };
            let report = verify::run(*suite, params)?;
            let note = format!(
                "{}: {} checks, {} failures in {:.2?}",
                report.suite, report.checked, report.failure_count, report.elapsed
            );
            let failed = !report.passed();
            let mut out = Outcome::ok(&report)?;
            out.note = Some(note);
            out.failed = failed;
            Ok(out)
        }
    }
}

fn canonical(p: &Partition) -> String {
    p.parts()
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
