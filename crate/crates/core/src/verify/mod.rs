//! Seeded property suites over the whole crate, with JSON/text reports.
//!
//! Every case draws its inputs from [`case_rng`](crate::sample::case_rng)
//! keyed by seed, property name and case index, so a report is reproducible
//! from its header alone.

mod algebra;
mod convex;
mod linear;
mod metric;
mod order;
mod separation;
mod theorems;

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::sample::case_rng;
use crate::scalar::{Bicomplex, Real};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Algebra,
    Order,
    Metric,
    Linear,
    Convex,
    Separation,
    Theorems,
}

impl Suite {
    pub const MEMBERS: [Suite; 7] = [
        Suite::Algebra,
        Suite::Order,
        Suite::Metric,
        Suite::Linear,
        Suite::Convex,
        Suite::Separation,
        Suite::Theorems,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Algebra => "algebra",
            Suite::Order => "order",
            Suite::Metric => "metric",
            Suite::Linear => "linear",
            Suite::Convex => "convex",
            Suite::Separation => "separation",
            Suite::Theorems => "theorems",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        std::iter::once(Suite::All)
            .chain(Suite::MEMBERS)
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        }
    }
}

impl FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "exact" => Ok(Backend::Exact),
            "float" => Ok(Backend::Float),
            other => Err(format!("unknown backend {other:?}")),
        }
    }
}

/// Deliberate defects used to check that the suites catch them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fault {
    /// Bicomplex products come back with their idempotent components swapped.
    SwapMul,
}

impl FromStr for Fault {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "swap-mul" => Ok(Fault::SwapMul),
            other => Err(format!("unknown fault {other:?}")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Cases per property; each property's own default when `None`.
    pub cases: Option<u64>,
    pub backend: Backend,
    pub fault: Option<Fault>,
}

impl VerifyConfig {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            cases: None,
            backend: Backend::Exact,
            fault: None,
        }
    }
}

/// Per-run switches visible to the checks.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Ctx {
    pub fault: Option<Fault>,
}

impl Ctx {
    /// Bicomplex product, possibly with an injected defect.
    pub fn mul<T: Real>(&self, a: &Bicomplex<T>, b: &Bicomplex<T>) -> Bicomplex<T> {
        let p = a * b;
        match self.fault {
            Some(Fault::SwapMul) => Bicomplex::new(p.z2, p.z1),
            None => p,
        }
    }
}

/// One failing case.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub property: String,
    pub case: u64,
    pub inputs: Value,
    pub expected: String,
    pub observed: Value,
}

/// What a single check reports on failure.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct CaseFailure {
    pub inputs: Value,
    pub expected: String,
    pub observed: Value,
}

pub(crate) type CaseResult = Result<(), CaseFailure>;

/// Shorthand for building a [`CaseFailure`].
pub(crate) fn fail(inputs: Value, expected: impl Into<String>, observed: Value) -> CaseResult {
    Err(CaseFailure {
        inputs,
        expected: expected.into(),
        observed,
    })
}

/// Fails with the given record unless `ok`.
pub(crate) fn ensure(
    ok: bool,
    inputs: impl FnOnce() -> Value,
    expected: &str,
    observed: impl FnOnce() -> Value,
) -> CaseResult {
    if ok {
        Ok(())
    } else {
        fail(inputs(), expected, observed())
    }
}

pub(crate) type Check = fn(&mut ChaCha8Rng, &Ctx) -> CaseResult;

/// A named randomized property.
#[derive(Clone, Copy)]
pub(crate) struct Property {
    pub name: &'static str,
    pub default_cases: u64,
    pub check: Check,
}

pub(crate) const fn prop(name: &'static str, default_cases: u64, check: Check) -> Property {
    Property {
        name,
        default_cases,
        check,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
}

/// Wall-clock data, excluded when comparing reports for determinism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Timing {
    pub wall_ms: u64,
    pub timestamp: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub backend: String,
    pub seed: u64,
    pub cases: u64,
    pub properties: Vec<PropertyReport>,
    pub failures: Vec<Failure>,
    pub timing: Timing,
}

/// Failure records kept per property; the count is always complete.
pub const MAX_RECORDED_FAILURES: usize = 20;

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.failures == 0)
    }

    pub fn property(&self, name: &str) -> Option<&PropertyReport> {
        self.properties.iter().find(|p| p.name == name)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// The report without its timing block.
    pub fn deterministic_json(&self) -> Value {
        let mut v = self.to_json();
        if let Some(obj) = v.as_object_mut() {
            obj.remove("timing");
        }
        v
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "suite {} backend {} seed {} cases {} ({} ms)",
            self.suite, self.backend, self.seed, self.cases, self.timing.wall_ms
        );
        for p in &self.properties {
            let status = if p.failures == 0 { "ok" } else { "FAIL" };
            let _ = writeln!(
                out,
                "  {:<40} {:>6} cases  {:>5} failures  {status}",
                p.name, p.cases, p.failures
            );
        }
        for f in &self.failures {
            let _ = writeln!(
                out,
                "failure {} case {}: expected {}",
                f.property, f.case, f.expected
            );
            let _ = writeln!(out, "  inputs   {}", f.inputs);
            let _ = writeln!(out, "  observed {}", f.observed);
        }
        let _ = writeln!(out, "{}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }
}

fn properties_for<T: Real>(suite: Suite) -> Vec<Property> {
    match suite {
        Suite::All => Suite::MEMBERS
            .iter()
            .flat_map(|&s| properties_for::<T>(s))
            .collect(),
        Suite::Algebra => algebra::properties::<T>(),
        Suite::Order => order::properties::<T>(),
        Suite::Metric => metric::properties::<T>(),
        Suite::Linear => linear::properties::<T>(),
        Suite::Convex => convex::properties::<T>(),
        Suite::Separation => separation::properties::<T>(),
        Suite::Theorems => theorems::properties::<T>(),
    }
}

/// Names and default case counts of a suite's properties.
pub fn property_names(suite: Suite) -> Vec<(&'static str, u64)> {
    properties_for::<f64>(suite)
        .iter()
        .map(|p| (p.name, p.default_cases))
        .collect()
}

fn run_property(p: &Property, config: &VerifyConfig, ctx: &Ctx) -> (PropertyReport, Vec<Failure>) {
    let cases = config.cases.unwrap_or(p.default_cases);
    let outcomes: Vec<(u64, CaseResult)> = (0..cases)
        .into_par_iter()
        .map(|case| {
            let mut rng = case_rng(config.seed, p.name, case);
            (case, (p.check)(&mut rng, ctx))
        })
        .collect();
    let mut failures = Vec::new();
    let mut count = 0;
    for (case, outcome) in outcomes {
        if let Err(f) = outcome {
            count += 1;
            if failures.len() < MAX_RECORDED_FAILURES {
                failures.push(Failure {
                    property: p.name.to_string(),
                    case,
                    inputs: f.inputs,
                    expected: f.expected,
                    observed: f.observed,
                });
            }
        }
    }
    (
        PropertyReport {
            name: p.name.to_string(),
            cases,
            failures: count,
        },
        failures,
    )
}

fn run_with<T: Real>(props: &[Property], label: &str, config: &VerifyConfig) -> SuiteReport {
    let start = Instant::now();
    let ctx = Ctx {
        fault: config.fault,
    };
    let mut properties = Vec::with_capacity(props.len());
    let mut failures = Vec::new();
    for p in props {
        let (report, fs) = run_property(p, config, &ctx);
        properties.push(report);
        failures.extend(fs);
    }
    SuiteReport {
        suite: label.to_string(),
        backend: T::BACKEND.to_string(),
        seed: config.seed,
        cases: properties.iter().map(|p| p.cases).sum(),
        properties,
        failures,
        timing: Timing {
            wall_ms: start.elapsed().as_millis() as u64,
            timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map_or(0, |d| d.as_secs()),
        },
    }
}

/// Runs a suite under the configured backend.
pub fn run_suite(suite: Suite, config: &VerifyConfig) -> SuiteReport {
    run_selected(suite, config, |_| true)
}

/// Runs the properties of `suite` whose names pass `filter`.
pub fn run_selected(
    suite: Suite,
    config: &VerifyConfig,
    filter: impl Fn(&str) -> bool,
) -> SuiteReport {
    match config.backend {
        Backend::Exact => {
            let props: Vec<Property> = properties_for::<crate::Rational>(suite)
                .into_iter()
                .filter(|p| filter(p.name))
                .collect();
            run_with::<crate::Rational>(&props, suite.name(), config)
        }
        Backend::Float => {
            let props: Vec<Property> = properties_for::<f64>(suite)
                .into_iter()
                .filter(|p| filter(p.name))
                .collect();
            run_with::<f64>(&props, suite.name(), config)
        }
    }
}

/// JSON view of any serializable value, for failure records.
pub(crate) fn js<S: Serialize + ?Sized>(v: &S) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}
