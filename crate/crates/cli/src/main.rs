//! Command-line front end: ingest a matrix, run one spectral operation, emit
//! a human-readable table or a stable JSON report.
//!
//! Exit status: 0 on success, 1 when a verification fails (a non-eigenvalue
//! was requested, a supplied pair does not verify, a Rayleigh bound or
//! oracle comparison fails), 2 on input errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use tropeig::charpoly::{
    algebraic_eigenvalues_with_cap, char_coefficients_oracle_with_cap, char_coefficients_with_cap,
};
use tropeig::geneig::{construct_all_with_cap, construct_with_cap, verify_parts, GenEigenpair};
use tropeig::sampling::span_samples;
use tropeig::spectral::{numerical_range, rayleigh_span_check};
use tropeig::{Error, Scalar, TropMatrix, TropVector};

/// Default enumeration cap for the spectral commands.
const DEFAULT_SIZE_CAP: usize = 10;
/// Default cap for the factorial oracle comparison.
const DEFAULT_ORACLE_CAP: usize = 8;
const JSON_SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "tropeig",
    version,
    about = "Exact tropical (max-plus) eigenvalues, generalized eigenvectors and numerical range"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Algebraic eigenvalues λ_1 ≤ … ≤ λ_n, with multiplicity
    Eig(MatrixArgs),
    /// Characteristic maxpolynomial coefficients c_0 … c_n
    Charpoly(MatrixArgs),
    /// Generalized eigenvectors for every eigenvalue, or one with --lambda
    Geneig {
        #[command(flatten)]
        matrix: MatrixArgs,
        /// Construct only for this eigenvalue (scalar token)
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Numerical range [min diagonal entry, max entry]
    Numrange(MatrixArgs),
    /// Rayleigh span check for the k-th eigenvalue over seeded samples
    Rayleigh {
        #[command(flatten)]
        matrix: MatrixArgs,
        /// Eigenvalue index, 1-based
        #[arg(long)]
        k: usize,
        /// Number of random max-combinations to evaluate
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Seed for the coefficient draws
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check a supplied (λ, x) pair against the generalized eigen equation
    Verify {
        #[command(flatten)]
        matrix: MatrixArgs,
        /// Eigenvalue candidate (scalar token)
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Vector as comma-separated scalar tokens, e.g. "0,-inf,-3/2"
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Compare the characteristic coefficients against the factorial oracle
    OracleCheck(MatrixArgs),
}

#[derive(Args)]
struct MatrixArgs {
    /// Matrix file
    input: PathBuf,
    /// Input format; inferred from the file extension when omitted
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Report format
    #[arg(long, value_enum, default_value_t = OutputKind::Text)]
    output: OutputKind,
    /// Enumeration size cap (default 10; 8 for oracle-check)
    #[arg(long)]
    size_cap: Option<usize>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputKind {
    Text,
    Json,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::NotAnEigenvalue(_)
            | Error::SpectrumMismatch(_)
            | Error::InternalVerificationFailed => 1,
            _ => 2,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn input_error(message: String) -> Failure {
    Failure { code: 2, message }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

/// Runs one command; `Ok(false)` means the report was emitted but a check
/// came out negative.
fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Eig(args) => {
            let a = read_matrix(&args)?;
            let cap = args.size_cap.unwrap_or(DEFAULT_SIZE_CAP);
            let spectrum = algebraic_eigenvalues_with_cap(&a, cap)?;
            match args.output {
                OutputKind::Text => println!("{spectrum}"),
                OutputKind::Json => println!(
                    "{}",
                    json!({
                        "schema": JSON_SCHEMA_VERSION,
                        "command": "eig",
                        "n": spectrum.len(),
                        "eigenvalues": tokens(&spectrum.eigenvalues()),
                    })
                ),
            }
            Ok(true)
        }
        Command::Charpoly(args) => {
            let a = read_matrix(&args)?;
            let cap = args.size_cap.unwrap_or(DEFAULT_SIZE_CAP);
            let p = char_coefficients_with_cap(&a, cap)?;
            match args.output {
                OutputKind::Text => {
                    for (k, c) in p.coefficients().iter().enumerate() {
                        println!("c_{k} = {c}");
                    }
                }
                OutputKind::Json => println!(
                    "{}",
                    json!({
                        "schema": JSON_SCHEMA_VERSION,
                        "command": "charpoly",
                        "degree": p.degree(),
                        "coefficients": tokens(p.coefficients()),
                    })
                ),
            }
            Ok(true)
        }
        Command::Geneig { matrix, lambda } => {
            let a = read_matrix(&matrix)?;
            let cap = matrix.size_cap.unwrap_or(DEFAULT_SIZE_CAP);
            let pairs = match lambda {
                Some(token) => {
                    let value: Scalar = token.parse()?;
                    vec![construct_with_cap(&a, &value, cap)?]
                }
                None => construct_all_with_cap(&a, cap)?,
            };
            let mut all_verified = true;
            let mut reports = Vec::with_capacity(pairs.len());
            for pair in &pairs {
                let verified = verify_parts(&a, &pair.lambda, &pair.vector)?;
                all_verified &= verified;
                reports.push((pair, verified));
            }
            match matrix.output {
                OutputKind::Text => {
                    for (pair, verified) in &reports {
                        println!(
                            "lambda = {}: x = {} [{}, p = {}, q = {}] {}",
                            pair.lambda,
                            pair.vector,
                            pair.trace.case,
                            pair.trace.p + 1,
                            pair.trace.q + 1,
                            if *verified { "verified" } else { "FAILED" }
                        );
                    }
                }
                OutputKind::Json => {
                    let body: Vec<serde_json::Value> =
                        reports.iter().map(|(p, v)| pair_json(p, *v)).collect();
                    println!(
                        "{}",
                        json!({
                            "schema": JSON_SCHEMA_VERSION,
                            "command": "geneig",
                            "pairs": body,
                        })
                    );
                }
            }
            Ok(all_verified)
        }
        Command::Numrange(args) => {
            let a = read_matrix(&args)?;
            let range = numerical_range(&a)?;
            match args.output {
                OutputKind::Text => println!("{range}"),
                OutputKind::Json => println!(
                    "{}",
                    json!({
                        "schema": JSON_SCHEMA_VERSION,
                        "command": "numrange",
                        "lo": range.lo().to_string(),
                        "hi": range.hi().to_string(),
                    })
                ),
            }
            Ok(true)
        }
        Command::Rayleigh {
            matrix,
            k,
            samples,
            seed,
        } => {
            let a = read_matrix(&matrix)?;
            let cap = matrix.size_cap.unwrap_or(DEFAULT_SIZE_CAP);
            let pairs = construct_all_with_cap(&a, cap)?;
            if k == 0 || k > pairs.len() {
                return Err(input_error(format!(
                    "--k must lie in 1..={}, got {k}",
                    pairs.len()
                )));
            }
            let tail = &pairs[k - 1..];
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let drawn = span_samples(&mut rng, samples, tail.len());
            let report = rayleigh_span_check(&a, tail, &drawn)?;
            let min_equals = report.min_observed == report.lambda_k;
            match matrix.output {
                OutputKind::Text => {
                    println!(
                        "k = {k}: lambda_k = {}, min observed = {} (witness coefficients {}), all quotients >= lambda_k: {}",
                        report.lambda_k,
                        report.min_observed,
                        token_list(&report.witness.coefficients),
                        report.all_geq_lambda_k
                    );
                }
                OutputKind::Json => println!(
                    "{}",
                    json!({
                        "schema": JSON_SCHEMA_VERSION,
                        "command": "rayleigh",
                        "k": k,
                        "lambda_k": report.lambda_k.to_string(),
                        "min_observed": report.min_observed.to_string(),
                        "min_equals_lambda_k": min_equals,
                        "all_geq_lambda_k": report.all_geq_lambda_k,
                        "witness": tokens(&report.witness.coefficients),
                        "samples": samples,
                        "seed": seed,
                    })
                ),
            }
            Ok(report.all_geq_lambda_k && min_equals)
        }
        Command::Verify {
            matrix,
            lambda,
            vector,
        } => {
            let a = read_matrix(&matrix)?;
            let value: Scalar = lambda.parse()?;
            let x = TropVector::parse_tokens(&vector)?;
            let verified = verify_parts(&a, &value, &x)?;
            match matrix.output {
                OutputKind::Text => println!("verified: {verified}"),
                OutputKind::Json => println!(
                    "{}",
                    json!({
                        "schema": JSON_SCHEMA_VERSION,
                        "command": "verify",
                        "lambda": value.to_string(),
                        "vector": tokens(x.entries()),
                        "verified": verified,
                    })
                ),
            }
            Ok(verified)
        }
        Command::OracleCheck(args) => {
            let a = read_matrix(&args)?;
            let cap = args.size_cap.unwrap_or(DEFAULT_ORACLE_CAP);
            let main = char_coefficients_with_cap(&a, cap)?;
            let oracle = char_coefficients_oracle_with_cap(&a, cap)?;
            let matches = main == oracle;
            match args.output {
                OutputKind::Text => {
                    println!("match: {matches}");
                    println!("coefficients:        {main}");
                    println!("oracle coefficients: {oracle}");
                }
                OutputKind::Json => println!(
                    "{}",
                    json!({
                        "schema": JSON_SCHEMA_VERSION,
                        "command": "oracle-check",
                        "match": matches,
                        "coefficients": tokens(main.coefficients()),
                        "oracle_coefficients": tokens(oracle.coefficients()),
                    })
                ),
            }
            Ok(matches)
        }
    }
}

fn read_matrix(args: &MatrixArgs) -> Result<TropMatrix, Failure> {
    let text = fs::read_to_string(&args.input)
        .map_err(|e| input_error(format!("cannot read {}: {e}", args.input.display())))?;
    let format = args.format.unwrap_or_else(|| {
        match args.input.extension().and_then(|e| e.to_str()) {
            Some("csv") => Format::Csv,
            _ => Format::Json,
        }
    });
    let matrix = match format {
        Format::Json => TropMatrix::from_json_str(&text)?,
        Format::Csv => TropMatrix::from_csv_str(&text)?,
    };
    Ok(matrix)
}

fn tokens(values: &[Scalar]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

fn token_list(values: &[Scalar]) -> String {
    format!(
        "({})",
        values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn pair_json(pair: &GenEigenpair, verified: bool) -> serde_json::Value {
    json!({
        "lambda": pair.lambda.to_string(),
        "vector": tokens(pair.vector.entries()),
        "case": pair.trace.case.as_str(),
        "p": pair.trace.p + 1,
        "q": pair.trace.q + 1,
        "verified": verified,
    })
}
