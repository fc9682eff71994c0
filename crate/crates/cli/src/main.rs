use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bicomplex::analysis::{hyperplane_gauge_bound, separate_hyperbolic, DHyperplane};
use bicomplex::convex::{minkowski_gauge, DConvexSet};
use bicomplex::linear::{DLinearFunctional, DVector};
use bicomplex::verify::{run_suite, Backend, Fault, Suite, VerifyConfig};
use bicomplex::{Error, Hyperbolic, Rational, Real};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "bicomplex",
    version,
    about = "Bicomplex and hyperbolic analysis toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run seeded property suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cases per property; each property's default when omitted.
        #[arg(long)]
        cases: Option<u64>,
        #[arg(long, default_value = "exact")]
        backend: Backend,
        /// Also write the JSON report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, hide = true)]
        inject_fault: Option<Fault>,
    },
    /// Separate an open set A from a set B given as {"A": ..., "B": ...}.
    Separate {
        input: PathBuf,
        /// Certificate destination; stdout when omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(long, default_value = "exact")]
        backend: Backend,
    },
    /// Hyperbolic Minkowski gauge of a point.
    Gauge {
        polytope: PathBuf,
        point: PathBuf,
        #[arg(long, default_value = "exact")]
        backend: Backend,
    },
    /// Gauge-bounded functional of a hyperplane {"f": [...], "level": ...} missing a set.
    Hyperplane {
        set: PathBuf,
        hyperplane: PathBuf,
        #[arg(long, default_value = "exact")]
        backend: Backend,
    },
}

/// Exit-code classes: computational refusals and malformed input.
enum Failure {
    Refused(Value),
    Schema(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::DimensionMismatch { .. } => Failure::Schema(e.to_string()),
            Error::NotDisjoint { component, witness } => Failure::Refused(json!({
                "error": "NotDisjoint",
                "component": component.to_string(),
                "witness": witness,
            })),
            other => Failure::Refused(
                json!({ "error": error_kind(&other), "message": other.to_string() }),
            ),
        }
    }
}

fn error_kind(e: &Error) -> String {
    let debug = format!("{e:?}");
    debug
        .split(['(', ' ', '{'])
        .next()
        .unwrap_or_default()
        .to_string()
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Schema(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Schema(format!("{}: {e}", path.display())))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, Failure> {
    v.get(key)
        .ok_or_else(|| Failure::Schema(format!("missing field {key:?}")))
}

fn parse<T: serde::de::DeserializeOwned>(v: &Value) -> Result<T, Failure> {
    serde_json::from_value(v.clone()).map_err(|e| Failure::Schema(e.to_string()))
}

fn emit(path: Option<&Path>, v: &Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(v).expect("JSON values serialize");
    match path {
        Some(p) => {
            fs::write(p, text + "\n").map_err(|e| Failure::Schema(format!("{}: {e}", p.display())))
        }
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn separate<T: Real>(input: &Path, output: Option<&Path>) -> Result<(), Failure> {
    let v = read_json(input)?;
    let a: DConvexSet<T> = parse(field(&v, "A")?)?;
    let b: DConvexSet<T> = parse(field(&v, "B")?)?;
    let cert = separate_hyperbolic(&a, &b)?;
    emit(
        output,
        &serde_json::to_value(&cert).expect("certificate serializes"),
    )
}

fn gauge<T: Real>(polytope: &Path, point: &Path) -> Result<(), Failure> {
    let b: DConvexSet<T> = parse(&read_json(polytope)?)?;
    let x: DVector<T> = parse(&read_json(point)?)?;
    let q: Hyperbolic<T> = minkowski_gauge(&b, &x)?;
    println!("{} {}", q.e1, q.e2);
    Ok(())
}

fn hyperplane<T: Real>(set: &Path, plane: &Path) -> Result<(), Failure> {
    let b: DConvexSet<T> = parse(&read_json(set)?)?;
    let v = read_json(plane)?;
    let f: DLinearFunctional<T> = DLinearFunctional::new(parse(field(&v, "f")?)?);
    let level: Hyperbolic<T> = parse(field(&v, "level")?)?;
    let bound = hyperplane_gauge_bound(&b, &DHyperplane::new(f, level))?;
    emit(
        None,
        &json!({ "f": bound.coeffs, "level": Hyperbolic::from_real(T::one()) }),
    )
}

fn by_backend(
    backend: Backend,
    exact: impl FnOnce() -> Result<(), Failure>,
    float: impl FnOnce() -> Result<(), Failure>,
) -> Result<(), Failure> {
    match backend {
        Backend::Exact => exact(),
        Backend::Float => float(),
    }
}

fn finish(outcome: Result<(), Failure>) -> ExitCode {
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Refused(record)) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&record).expect("JSON values serialize")
            );
            ExitCode::from(1)
        }
        Err(Failure::Schema(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify {
            suite,
            seed,
            cases,
            backend,
            report,
            format,
            inject_fault,
        } => {
            let config = VerifyConfig {
                seed,
                cases,
                backend,
                fault: inject_fault,
            };
            let result = run_suite(suite, &config);
            if let Some(path) = &report {
                let text =
                    serde_json::to_string_pretty(&result.to_json()).expect("report serializes");
                if let Err(e) = fs::write(path, text + "\n") {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            match format {
                Format::Text => print!("{}", result.render_text()),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&result.to_json()).expect("report serializes")
                ),
            }
            if result.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Separate {
            input,
            output,
            backend,
        } => finish(by_backend(
            backend,
            || separate::<Rational>(&input, output.as_deref()),
            || separate::<f64>(&input, output.as_deref()),
        )),
        Command::Gauge {
            polytope,
            point,
            backend,
        } => finish(by_backend(
            backend,
            || gauge::<Rational>(&polytope, &point),
            || gauge::<f64>(&polytope, &point),
        )),
        Command::Hyperplane {
            set,
            hyperplane: plane,
            backend,
        } => finish(by_backend(
            backend,
            || hyperplane::<Rational>(&set, &plane),
            || hyperplane::<f64>(&set, &plane),
        )),
    }
}
