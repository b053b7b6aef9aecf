//! Command-line front end for the `specht` crate.
//!
//! Exit codes: 0 success, 1 verification mismatch under the conjecture
//! hypothesis, 2 invalid input, 3 computational limit reached.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use specht::decomposition::{default_max_residue, low_degree_family, ClassLabel};
use specht::parameters::DEFAULT_SEARCH_CEILING;
use specht::partition::is_p_regular;
use specht::{
    a_set, decompose_irreducible, decompose_standard, divisor_prime_census, gram_matrix,
    gram_rank_mod_p, irreducible_dimension_table, prime_parameter_sequence, run_verification,
    specht_dimension, specht_dimension_polynomial, Execution, IntegerPolynomial, OracleConfig,
    PaddedShape, Partition,
};

#[derive(Parser)]
#[command(name = "specht", version, about = "Low-degree modular representations of symmetric groups")]
struct Cli {
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    /// Largest partition size the Gram oracle accepts.
    #[arg(long, global = true, env = "SPECHT_SIZE_CAP", default_value_t = 16)]
    size_cap: usize,

    /// Run everything on the current thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of the Specht module S^λ, e.g. `dim-specht [5,2]`.
    DimSpecht { lambda: Partition },
    /// Polynomial in n for dim S^(n-|μ|, μ).
    DimPoly { mu: Partition },
    /// The chain A(λ, m) in decreasing dominance order.
    ASet { lambda: Partition, m: usize },
    /// [D^λ] as an alternating sum of Specht classes along A(λ, m).
    DecomposeIrr { lambda: Partition, m: usize },
    /// [S^λ] in terms of irreducibles over the family n - ν_1 <= k.
    DecomposeStd { lambda: Partition, m: usize, k: usize },
    /// dim D^(n-|μ|, μ) by residue of n modulo p.
    DimTable {
        mu: Partition,
        #[arg(long)]
        max_residue: Option<usize>,
    },
    /// Rank of the Gram matrix of S^λ over F_p.
    GramRank {
        lambda: Partition,
        p: u64,
        /// Write the Gram matrix mod p to this file.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Compare dimension formulas with the Gram-rank oracle over a grid.
    Verify {
        /// Tail partitions μ; repeat the flag for several.
        #[arg(long = "mu", required = true)]
        mus: Vec<Partition>,
        /// Primes; repeat the flag or separate with commas.
        #[arg(long = "p", required = true, value_delimiter = ',')]
        primes: Vec<u64>,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
    },
    /// Pairs (t, p) with p prime dividing q(t) and p increasing.
    PrimeSeq {
        /// Coefficients, constant term first, e.g. `1,0,1` for x^2 + 1.
        #[arg(allow_hyphen_values = true)]
        coeffs: IntegerPolynomial,
        count: usize,
        /// Only primes strictly above this are accepted.
        #[arg(long, default_value_t = 2)]
        p_min: u64,
        #[arg(long, default_value_t = DEFAULT_SEARCH_CEILING)]
        ceiling: u64,
    },
    /// Primes dividing some positive q(t) with 1 <= t <= N.
    Census {
        #[arg(allow_hyphen_values = true)]
        coeffs: IntegerPolynomial,
        bound: u64,
    },
}

enum Failure {
    Input(String),
    Limit(String),
    Mismatch,
}

impl From<specht::Error> for Failure {
    fn from(e: specht::Error) -> Self {
        if e.is_limit() {
            Failure::Limit(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn class_symbol(label: ClassLabel, lambda: &Partition) -> String {
    let s = lambda.to_string();
    let inner = &s[1..s.len() - 1];
    match label {
        ClassLabel::Specht => format!("[S^({inner})]"),
        ClassLabel::Irreducible => format!("[D^({inner})]"),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let oracle = OracleConfig {
        size_cap: cli.size_cap,
        exec,
        ..OracleConfig::default()
    };

    match cli.command {
        Command::DimSpecht { lambda } => {
            let dim = specht_dimension(&lambda)?;
            if cli.json {
                print_json(&json!({ "partition": lambda, "dimension": dim.to_string() }));
            } else {
                println!("{dim}");
            }
        }
        Command::DimPoly { mu } => {
            let shape = PaddedShape::new(mu);
            let poly = specht_dimension_polynomial(&shape);
            if cli.json {
                print_json(&json!({
                    "tail": shape.tail(),
                    "threshold": shape.threshold(),
                    "polynomial": poly,
                }));
            } else {
                println!("dim S^{shape} = {poly}    (n >= {})", shape.threshold());
            }
        }
        Command::ASet { lambda, m } => {
            let chain = a_set(&lambda, m)?;
            if cli.json {
                print_json(&json!({ "partition": lambda, "m": m, "elements": chain.elements() }));
            } else {
                println!("{chain}");
            }
        }
        Command::DecomposeIrr { lambda, m } => {
            let v = decompose_irreducible(&lambda, m)?;
            if cli.json {
                print_json(&v);
            } else {
                println!("{} = {v}", class_symbol(ClassLabel::Irreducible, &lambda));
            }
        }
        Command::DecomposeStd { lambda, m, k } => {
            let family = low_degree_family(lambda.size(), k);
            let v = decompose_standard(&lambda, m, &family)?;
            if cli.json {
                print_json(&v);
            } else {
                println!("{} = {v}", class_symbol(ClassLabel::Specht, &lambda));
            }
        }
        Command::DimTable { mu, max_residue } => {
            let shape = PaddedShape::new(mu);
            let table = irreducible_dimension_table(&shape, max_residue, exec)?;
            if cli.json {
                let cases: Vec<_> = table
                    .cases()
                    .iter()
                    .rev()
                    .map(|(m, poly)| json!({ "residue": m, "polynomial": poly }))
                    .collect();
                print_json(&json!({
                    "tail": shape.tail(),
                    "max_residue": max_residue.unwrap_or_else(|| default_max_residue(&shape)),
                    "cases": cases,
                    "default": table.default_case(),
                }));
            } else {
                print!("{table}");
            }
        }
        Command::GramRank { lambda, p, dump } => {
            let rank = gram_rank_mod_p(&lambda, p, &oracle)?;
            if let Some(path) = dump {
                let g = gram_matrix(&lambda, &oracle)?;
                fs::write(&path, g.dump_mod_p(p))
                    .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
            }
            if cli.json {
                print_json(&json!({
                    "partition": lambda,
                    "p": p,
                    "rank": rank,
                    "p_regular": is_p_regular(&lambda, p)?,
                }));
            } else {
                println!("{rank}");
            }
        }
        Command::Verify { mus, primes, n_min, n_max } => {
            if n_min > n_max {
                return Err(Failure::Input(format!("--n-min {n_min} exceeds --n-max {n_max}")));
            }
            let report = run_verification(&mus, &primes, n_min..=n_max, &oracle, exec)?;
            if cli.json {
                print_json(&report);
            } else {
                print!("{report}");
            }
            if report.has_failures() {
                return Err(Failure::Mismatch);
            }
        }
        Command::PrimeSeq { coeffs, count, p_min, ceiling } => {
            let pairs = prime_parameter_sequence(&coeffs, count, p_min, ceiling)?;
            if cli.json {
                print_json(&pairs);
            } else {
                let text: Vec<String> = pairs.iter().map(ToString::to_string).collect();
                println!("{}", text.join(" "));
            }
        }
        Command::Census { coeffs, bound } => {
            let primes = divisor_prime_census(&coeffs, bound, exec)?;
            if cli.json {
                print_json(&json!({ "polynomial": coeffs.to_string(), "bound": bound, "primes": primes }));
            } else {
                println!("{} primes divide q(t) = {coeffs} for 1 <= t <= {bound}", primes.len());
                let text: Vec<String> = primes.iter().map(ToString::to_string).collect();
                println!("{}", text.join(" "));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
