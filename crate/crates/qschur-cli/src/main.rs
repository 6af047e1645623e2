//! `qschur` — command-line front end for the exact Schur–Weyl engine.
//!
//! Four subcommands: `decompose` splits V^{⊗k} into hook summands with
//! multiplicities and exact dimensions, `hwv` builds and certifies the
//! highest weight vector of a standard hook tableau, `verify` runs the
//! identity suites at one configuration, and `hecke-eval` multiplies
//! Hecke algebra expressions written in the text grammar.  Output is
//! byte-deterministic; JSON carries a top-level `"schema": 1` marker.
//! Exit codes: 0 on success, 1 on a verification failure, 2 on invalid
//! input.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use qschur::decompose::{decompose, highest_weight_vector, verify_all};
use qschur::{Error, HeckeElement, StandardTableau};

#[derive(Parser)]
#[command(name = "qschur", version, about = "Exact Schur-Weyl decomposition engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose V^{⊗k} into hook summands with multiplicities and dimensions
    Decompose(SpaceArgs),
    /// Construct and certify the highest weight vector of a standard tableau
    Hwv(HwvArgs),
    /// Run the verification suites at one configuration
    Verify(SpaceArgs),
    /// Multiply Hecke algebra expressions written in the text grammar
    HeckeEval(HeckeEvalArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct CommonArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Guard on the tensor space dimension (m+n)^k
    #[arg(long, env = "QSCHUR_BOUND")]
    bound: Option<u64>,
}

impl CommonArgs {
    fn bound(&self) -> u128 {
        self.bound.map(u128::from).unwrap_or(qschur::DEFAULT_DIMENSION_BOUND)
    }
}

#[derive(Args)]
struct SpaceArgs {
    /// Number of even basis letters
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    m: u64,
    /// Number of odd basis letters
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    /// Tensor power
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct HwvArgs {
    #[command(flatten)]
    space: SpaceArgs,
    /// Standard tableau literal, rows separated by '/' (e.g. "1,2,4/3,5")
    #[arg(long)]
    tableau: String,
}

#[derive(Args)]
struct HeckeEvalArgs {
    /// Rank of the Hecke algebra (number of strands)
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,
    /// Expressions in the Hecke text grammar, multiplied left to right
    #[arg(required = true)]
    expr: Vec<String>,
    #[command(flatten)]
    common: CommonArgs,
}

/// Print one line to stdout, exiting quietly if the pipe has closed.
fn emit(text: impl std::fmt::Display) {
    use std::io::Write;
    if writeln!(std::io::stdout(), "{text}").is_err() {
        std::process::exit(0);
    }
}

/// Insert the schema marker into a JSON object.
fn with_schema(mut value: serde_json::Value) -> serde_json::Value {
    value
        .as_object_mut()
        .expect("top-level JSON output is an object")
        .insert("schema".into(), json!(1));
    value
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. }
        | Error::InvalidPartition { .. }
        | Error::InvalidTableau { .. }
        | Error::InvalidPermutation { .. }
        | Error::NotHook { .. }
        | Error::GroupGuardExceeded { .. }
        | Error::DimensionBoundExceeded { .. }
        | Error::InhomogeneousWeight { .. } => 2,
        Error::DivisionByZero
        | Error::Pole { .. }
        | Error::XiExtraction { .. }
        | Error::CertificateFailed { .. }
        | Error::DecompositionMismatch { .. } => 1,
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Decompose(args) => {
            let report = decompose(
                args.m as usize,
                args.n as usize,
                args.k as usize,
                args.common.bound(),
            )?;
            match args.common.format {
                Format::Text => emit(&report),
                Format::Json => emit(with_schema(report.to_json())),
            }
            Ok(0)
        }
        Command::Hwv(args) => {
            let tableau = StandardTableau::parse(&args.tableau)?;
            if tableau.size() != args.space.k as usize {
                return Err(Error::InvalidTableau {
                    reason: format!(
                        "tableau has {} boxes but k = {}",
                        tableau.size(),
                        args.space.k
                    ),
                });
            }
            let certificate =
                highest_weight_vector(&tableau, args.space.m as usize, args.space.n as usize)?;
            match args.space.common.format {
                Format::Text => emit(&certificate),
                Format::Json => emit(with_schema(certificate.to_json())),
            }
            Ok(0)
        }
        Command::Verify(args) => {
            let suites = verify_all(
                args.m as usize,
                args.n as usize,
                args.k as usize,
                args.common.bound(),
            )?;
            let all_passed = suites.iter().all(|s| s.passed());
            match args.common.format {
                Format::Text => {
                    for suite in &suites {
                        emit(suite);
                    }
                    emit(format_args!("overall: {}", if all_passed { "PASS" } else { "FAIL" }));
                }
                Format::Json => {
                    let body = json!({
                        "m": args.m,
                        "n": args.n,
                        "k": args.k,
                        "passed": all_passed,
                        "suites": suites.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
                    });
                    emit(with_schema(body));
                }
            }
            Ok(if all_passed { 0 } else { 1 })
        }
        Command::HeckeEval(args) => {
            let k = args.k as usize;
            let mut product = HeckeElement::one(k);
            for expr in &args.expr {
                let factor = HeckeElement::parse(expr, k)?;
                product = &product * &factor;
            }
            match args.common.format {
                Format::Text => emit(&product),
                Format::Json => {
                    let body = json!({"k": k, "terms": product.to_json()});
                    emit(with_schema(body));
                }
            }
            Ok(0)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code(&err)
        }
    };
    std::process::exit(code);
}
