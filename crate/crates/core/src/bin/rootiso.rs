use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rootiso::bench::{self, BenchSpec, Family, Verification};
use rootiso::io::{fmt_rational, format_results, parse_polynomial, InputFormat, OutputMode};
use rootiso::{asv_bound, cauchy_bound, oracle_isolate, sturm_count, up_bound, Error, IntPoly};
use rootiso::{IsolateOptions, Isolator, RootInterval};

#[derive(Parser)]
#[command(name = "rootiso", version, about = "Exact real-root isolation for integer polynomials")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args)]
struct Input {
    /// Input file, or `-` for stdin.
    #[arg(long = "in", default_value = "-")]
    input: String,
    /// Input format; coefficient lists run from the constant term upward.
    #[arg(long, value_enum, default_value_t = Fmt::Expr)]
    format: Fmt,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fmt {
    Expr,
    Coeffs,
    Sparse,
}

#[derive(Clone, Copy, ValueEnum)]
enum Out {
    Human,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Alg {
    Logcf,
    Cauchy,
    Asv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Isolate all real roots.
    Isolate {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Out::Human)]
        out: Out,
        /// Disable the x^k substitution.
        #[arg(long)]
        no_subst: bool,
        /// Disable the early split check.
        #[arg(long)]
        no_early_split: bool,
        /// Recompute every budget-based emission.
        #[arg(long)]
        paranoid: bool,
    },
    /// Upper bound on the positive roots.
    Bound {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Alg::Logcf)]
        alg: Alg,
    },
    /// Generate a family member, isolate it and report timing.
    Bench {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1 << 20)]
        b: u64,
        #[arg(long, default_value_t = 0.5)]
        r: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write NA instead of wall times so output is reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Compare the isolator against the Sturm oracle.
    OracleCheck {
        #[command(flatten)]
        input: Input,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn read_poly(input: &Input) -> Result<IntPoly, Failure> {
    let text = if input.input == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(&input.input)
            .map_err(|e| Failure::Usage(format!("reading {}: {e}", input.input)))?
    };
    let format = match input.format {
        Fmt::Expr => InputFormat::Expr,
        Fmt::Coeffs => InputFormat::Coeffs,
        Fmt::Sparse => InputFormat::Sparse,
    };
    Ok(parse_polynomial(&text, format)?)
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("writing {}: {e}", path.display())))
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Isolate {
            input,
            out,
            no_subst,
            no_early_split,
            paranoid,
        } => {
            let p = read_poly(&input)?;
            let opts = IsolateOptions {
                substitution: !no_subst,
                early_split: !no_early_split,
                paranoid,
            };
            let roots = Isolator::new(opts).isolate(&p)?;
            let mode = match out {
                Out::Human => OutputMode::Human,
                Out::Json => OutputMode::Json,
            };
            let text = format_results(&roots, mode);
            match mode {
                OutputMode::Human => print!("{text}"),
                OutputMode::Json => println!("{text}"),
            }
        }
        Cmd::Bound { input, alg } => {
            let p = read_poly(&input)?;
            let u = match alg {
                Alg::Logcf => up_bound(&p)?,
                Alg::Cauchy => cauchy_bound(&p)?,
                Alg::Asv => asv_bound(&p)?,
            };
            println!("{}", fmt_rational(&u));
        }
        Cmd::Bench {
            family,
            n,
            b,
            r,
            seed,
            trials,
            csv,
            json,
            no_timing,
        } => {
            let family: Family = family.parse()?;
            let spec = BenchSpec {
                family,
                n,
                b,
                r,
                seed,
                trials,
            };
            let mut report = bench::run(&spec, IsolateOptions::default())?;
            if no_timing {
                for rec in &mut report.records {
                    rec.wall_seconds = 0.0;
                }
                report.mean_seconds = 0.0;
            }
            let table = bench::to_csv(&report.records, !no_timing);
            if let Some(path) = &csv {
                write_file(path, &table)?;
            }
            if let Some(path) = &json {
                let text = serde_json::to_string_pretty(&report).expect("report serializes");
                write_file(path, &(text + "\n"))?;
            }
            if csv.is_none() && json.is_none() {
                print!("{table}");
            }
            if report.records.len() > 1 && !no_timing {
                eprintln!("mean wall_seconds: {:.6}", report.mean_seconds);
            }
            if report.records.iter().any(|r| r.verified == Verification::Failed) {
                return Err(Failure::Internal("verification failed".into()));
            }
        }
        Cmd::OracleCheck { input } => {
            let p = read_poly(&input)?;
            let ours = Isolator::new(IsolateOptions::default()).isolate(&p)?;
            let truth = oracle_isolate(&p)?;
            if ours.len() != truth.len() {
                return Err(Failure::Internal(format!(
                    "mismatch: isolator found {} roots, oracle {}",
                    ours.len(),
                    truth.len()
                )));
            }
            let f = rootiso::square_free_part(&p).unwrap_or(p);
            for iv in &ours {
                if let RootInterval::Open(lo, hi) = iv {
                    if sturm_count(&f, lo, hi)? != 1 {
                        return Err(Failure::Internal(format!(
                            "interval ({}, {}) does not isolate one root",
                            fmt_rational(lo),
                            fmt_rational(hi)
                        )));
                    }
                }
            }
            println!("ok: {} roots", ours.len());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
